#include "diffset/step_function.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace diffset {

namespace {

Rational overlap(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
  const Rational& lo = a1 > b1 ? a1 : b1;
  const Rational& hi = a2 < b2 ? a2 : b2;
  return hi > lo ? Rational(hi - lo) : Rational(0);
}

struct Piece {
  Rational lo, hi, c;
};

std::vector<Piece> nonzero_pieces(const StepFunction& f) {
  std::vector<Piece> out;
  const auto& b = f.breakpoints();
  const auto& c = f.coefs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out.push_back({b[i], b[i + 1], c[i]});
  }
  return out;
}

Rational correlation_with(const std::vector<Piece>& ps, const Rational& radicand, const Rational& x) {
  Rational sum = 0;
  for (const auto& p : ps) {
    for (const auto& q : ps) {
      Rational ov = overlap(p.lo, p.hi, q.lo - x, q.hi - x);
      if (ov != 0) sum += p.c * q.c * ov;
    }
  }
  return sum * radicand;
}

Rational convolution_with(const std::vector<Piece>& ps, const Rational& radicand, const Rational& x) {
  Rational sum = 0;
  for (const auto& p : ps) {
    for (const auto& q : ps) {
      Rational ov = overlap(p.lo, p.hi, x - q.hi, x - q.lo);
      if (ov != 0) sum += p.c * q.c * ov;
    }
  }
  return sum * radicand;
}

Extremum min_over(const std::vector<Piece>& ps, const Rational& radicand, const std::set<Rational>& xs) {
  Extremum best{0, 0};
  bool first = true;
  for (const auto& x : xs) {
    Rational v = correlation_with(ps, radicand, x);
    if (first || v < best.value) {
      best = {v, x};
      first = false;
    }
  }
  return best;
}

}  // namespace

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> coefs, Rational radicand)
    : breakpoints_(std::move(breakpoints)), coefs_(std::move(coefs)), radicand_(std::move(radicand)) {
  for (auto& b : breakpoints_) b.canonicalize();
  for (auto& c : coefs_) c.canonicalize();
  radicand_.canonicalize();
  if (breakpoints_.empty() && coefs_.empty()) return;
  if (breakpoints_.size() != coefs_.size() + 1) {
    throw std::invalid_argument("step function needs one value per piece");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  for (const auto& c : coefs_) {
    if (c < 0) throw std::invalid_argument("step function values must be nonnegative");
  }
  if (radicand_ <= 0) throw std::invalid_argument("scale radicand must be positive");
}

StepFunction StepFunction::box(Rational lo, Rational hi, Rational c) {
  return StepFunction({std::move(lo), std::move(hi)}, {std::move(c)});
}

bool StepFunction::is_zero() const {
  return std::all_of(coefs_.begin(), coefs_.end(), [](const Rational& c) { return c == 0; });
}

Rational StepFunction::support_lo() const {
  for (std::size_t i = 0; i < coefs_.size(); ++i) {
    if (coefs_[i] != 0) return breakpoints_[i];
  }
  throw std::logic_error("zero function has empty support");
}

Rational StepFunction::support_hi() const {
  for (std::size_t i = coefs_.size(); i-- > 0;) {
    if (coefs_[i] != 0) return breakpoints_[i + 1];
  }
  throw std::logic_error("zero function has empty support");
}

SqrtScaled StepFunction::value_at(const Rational& x) const {
  if (coefs_.empty() || x < breakpoints_.front() || x >= breakpoints_.back()) return {0, radicand_};
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return {coefs_[static_cast<std::size_t>(it - breakpoints_.begin() - 1)], radicand_};
}

SqrtScaled StepFunction::l1_norm() const {
  Rational sum = 0;
  for (std::size_t i = 0; i < coefs_.size(); ++i) sum += coefs_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  return {sum, radicand_};
}

Rational StepFunction::cumulative_coef(const Rational& x) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < coefs_.size(); ++i) {
    if (breakpoints_[i] >= x) break;
    const Rational& hi = breakpoints_[i + 1] < x ? breakpoints_[i + 1] : x;
    sum += coefs_[i] * (hi - breakpoints_[i]);
  }
  return sum;
}

StepFunction StepFunction::dilated(const Rational& s) const {
  if (s <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<Rational> b;
  b.reserve(breakpoints_.size());
  for (const auto& x : breakpoints_) b.push_back(x * s);
  return StepFunction(std::move(b), coefs_, radicand_);
}

Integer StepFunction::grid_denominator() const {
  Integer d = 1;
  for (const auto& x : breakpoints_) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  }
  return d;
}

StepFunction set_to_step(const IntSet& a, std::int64_t g, std::int64_t n) {
  if (a.empty()) throw std::invalid_argument("empty set");
  if (g < 1 || n < 1) throw std::invalid_argument("g and N must be positive");
  std::vector<Rational> b;
  std::vector<Rational> c;
  auto e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0 && e[i] != e[i - 1] + 1) {
      c.emplace_back(0);  // gap
      b.emplace_back(e[i], n);
    } else if (i == 0) {
      b.emplace_back(e[i], n);
    }
    c.emplace_back(1);
    b.emplace_back(e[i] + 1, n);
  }
  for (auto& x : b) x.canonicalize();
  Rational rad(n, g);
  rad.canonicalize();
  return StepFunction(std::move(b), std::move(c), std::move(rad));
}

Rational autocorrelation(const StepFunction& f, const Rational& x) {
  return correlation_with(nonzero_pieces(f), f.radicand(), x);
}

Rational autoconvolution(const StepFunction& f, const Rational& x) {
  return convolution_with(nonzero_pieces(f), f.radicand(), x);
}

Extremum autocorrelation_min_breakpoints(const StepFunction& f, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("empty interval");
  std::set<Rational> xs{lo, hi};
  const auto& b = f.breakpoints();
  for (const auto& u : b) {
    for (const auto& v : b) {
      Rational d = v - u;
      if (d > lo && d < hi) xs.insert(d);
    }
  }
  return min_over(nonzero_pieces(f), f.radicand(), xs);
}

Extremum autocorrelation_min(const StepFunction& f, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("empty interval");
  const Integer d = f.grid_denominator();
  const Rational lo_scaled = lo * Rational(d);
  const Rational hi_scaled = hi * Rational(d);
  const Rational span = floor(hi_scaled) - ceil(lo_scaled);
  if (span > 4096) return autocorrelation_min_breakpoints(f, lo, hi);
  std::set<Rational> xs{lo, hi};
  const Integer first = ceil(lo_scaled).get_num();
  const Integer last = floor(hi_scaled).get_num();
  for (Integer j = first; j <= last; ++j) {
    Rational x(j, d);
    x.canonicalize();
    xs.insert(x);
  }
  return min_over(nonzero_pieces(f), f.radicand(), xs);
}

Extremum autoconvolution_max(const StepFunction& f) {
  auto ps = nonzero_pieces(f);
  if (ps.empty()) return {0, 0};
  std::set<Rational> xs;
  const auto& b = f.breakpoints();
  for (const auto& u : b) {
    for (const auto& v : b) xs.insert(u + v);
  }
  Extremum best{0, 0};
  bool first = true;
  for (const auto& x : xs) {
    Rational v = convolution_with(ps, f.radicand(), x);
    if (first || v > best.value) {
      best = {v, x};
      first = false;
    }
  }
  return best;
}

FamilyVerdict check_autocorrelation_family(const StepFunction& f) {
  FamilyVerdict v;
  v.extremum = autocorrelation_min(f, 0, 1);
  v.member = v.extremum.value >= 1;
  return v;
}

FamilyVerdict check_autoconvolution_family(const StepFunction& f) {
  if (!f.is_zero() && (f.support_lo() < 0 || f.support_hi() > 1)) {
    throw std::invalid_argument("support outside [0,1]");
  }
  FamilyVerdict v;
  v.extremum = autoconvolution_max(f);
  v.member = v.extremum.value <= 1;
  return v;
}

}  // namespace diffset
