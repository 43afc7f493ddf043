#include "diffset/averages.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diffset {

Rational AveragesSeq::coef_at(std::int64_t i) const {
  if (i < first_index() || i > last_index()) return 0;
  return coefs[static_cast<std::size_t>(i - offset)];
}

SqrtScaled AveragesSeq::sum() const {
  Rational s = 0;
  for (const auto& c : coefs) s += c;
  return {s, radicand};
}

std::int64_t averaging_window(std::int64_t n, const Rational& tau_hat) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  if (tau_hat <= 0) throw std::invalid_argument("tau_hat must be positive");
  Rational half = tau_hat / 2;
  Rational nn(n);
  return ceil_cbrt(Rational(half * half * half * nn * nn)).get_si();
}

AveragesResult local_averages(const StepFunction& f, std::int64_t n, const Rational& tau_hat,
                              const AveragesOptions& opts) {
  const std::int64_t window = averaging_window(n, tau_hat);
  if (2 * window - 1 >= n) throw std::invalid_argument("N too small for L");
  if (f.is_zero() || !check_autocorrelation_family(f).member) {
    throw std::invalid_argument("f is not in the autocorrelation family");
  }

  AveragesResult out;
  AveragesSeq& seq = out.seq;
  seq.n = n;
  seq.window = window;
  seq.tau_hat = tau_hat;
  seq.radicand = f.radicand();
  const std::int64_t covered = n - 2 * window + 1;
  if (opts.stretch) {
    seq.stretch = Rational(n, covered);
    seq.stretch.canonicalize();
  }
  const StepFunction g = opts.stretch ? f.dilated(seq.stretch) : f;

  const Rational nn(n);
  const std::int64_t first = floor(g.support_lo() * nn).get_num().get_si() - window;
  const std::int64_t last = ceil(g.support_hi() * nn).get_num().get_si() + window;

  // Cumulative integral at every grid point j/N, j in [first - L, last + L].
  std::vector<Rational> cumulative;
  cumulative.reserve(static_cast<std::size_t>(last - first + 2 * window + 1));
  {
    const auto& b = g.breakpoints();
    const auto& c = g.coefs();
    std::size_t piece = 0;
    Rational done = 0;  // integral over pieces fully left of x
    for (std::int64_t j = first - window; j <= last + window; ++j) {
      Rational x(j, n);
      x.canonicalize();
      while (piece < c.size() && b[piece + 1] <= x) {
        done += c[piece] * (b[piece + 1] - b[piece]);
        ++piece;
      }
      Rational v = done;
      if (piece < c.size() && b[piece] < x) v += c[piece] * (x - b[piece]);
      cumulative.push_back(std::move(v));
    }
  }
  const Rational scale = ratio(n, 2 * window);
  seq.offset = first;
  seq.coefs.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t i = first; i <= last; ++i) {
    const auto hi = static_cast<std::size_t>(i + window - (first - window));
    const auto lo = static_cast<std::size_t>(i - window - (first - window));
    seq.coefs.push_back(scale * (cumulative[hi] - cumulative[lo]));
  }
  while (!seq.coefs.empty() && seq.coefs.back() == 0) seq.coefs.pop_back();
  std::size_t lead = 0;
  while (lead < seq.coefs.size() && seq.coefs[lead] == 0) ++lead;
  seq.coefs.erase(seq.coefs.begin(), seq.coefs.begin() + static_cast<std::ptrdiff_t>(lead));
  seq.offset += static_cast<std::int64_t>(lead);

  AveragesConditions& cond = out.conditions;
  cond.sum = seq.sum();
  cond.sum_bound = nn * tau_hat * seq.stretch;
  cond.sum_ok = compare(cond.sum, cond.sum_bound) <= 0;

  Rational max_coef = *std::max_element(seq.coefs.begin(), seq.coefs.end());
  cond.max_share = max_coef / cond.sum.coef;
  {
    // max_share * tau_hat * N^{2/3} <= 1
    Rational t = cond.max_share * tau_hat;
    cond.max_ok = t * t * t * nn * nn <= 1;
  }

  cond.m_max = opts.stretch ? n : covered;
  cond.pair_bound = ratio(2 * window - 1, 2 * window) * nn;
  const auto len = static_cast<std::int64_t>(seq.coefs.size());
  if (len * cond.m_max <= opts.pair_budget) {
    for (std::int64_t m = 1; m <= cond.m_max; ++m) {
      Rational s = 0;
      for (std::int64_t i = 0; i + m < len; ++i) {
        s += seq.coefs[static_cast<std::size_t>(i)] * seq.coefs[static_cast<std::size_t>(i + m)];
      }
      s *= seq.radicand;
      if (!cond.min_pair_sum || s < *cond.min_pair_sum) {
        cond.min_pair_sum = s;
        cond.min_pair_shift = m;
      }
    }
    cond.pair_ok = *cond.min_pair_sum >= cond.pair_bound;
  }
  return out;
}

ProbSeq ProbSeq::from_probabilities(std::int64_t offset, std::vector<Rational> p) {
  for (auto& x : p) {
    x.canonicalize();
    if (x < 0 || x > 1) throw std::invalid_argument("probability outside [0,1]");
  }
  return scaled(offset, std::move(p), CubeRootScaled{1, 1});
}

ProbSeq ProbSeq::scaled(std::int64_t offset, std::vector<Rational> weights, CubeRootScaled mass) {
  if (mass.coef < 0 || mass.radicand < 0) throw std::invalid_argument("negative probability mass");
  ProbSeq out;
  out.offset_ = offset;
  out.mass_ = std::move(mass);
  Rational max_w = 0;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("probability outside [0,1]");
    if (w > max_w) max_w = w;
    out.weight_sum_ += w;
  }
  if (compare(CubeRootScaled{out.mass_.coef * max_w, out.mass_.radicand}, Rational(1)) > 0) {
    throw std::invalid_argument("probability outside [0,1]");
  }
  out.weights_ = std::move(weights);
  const double m = out.mass_.to_double();
  out.probs_.reserve(out.weights_.size());
  for (const auto& w : out.weights_) out.probs_.push_back(std::min(1.0, m * w.get_d()));
  return out;
}

double ProbSeq::probability(std::int64_t i) const {
  if (i < offset_ || i >= offset_ + static_cast<std::int64_t>(probs_.size())) return 0.0;
  return probs_[static_cast<std::size_t>(i - offset_)];
}

double ProbSeq::expected_size() const { return mass_.to_double() * weight_sum_.get_d(); }

ProbSeq averages_to_probs(const AveragesSeq& a) {
  Rational total = 0;
  for (const auto& c : a.coefs) total += c;
  if (total <= 0) throw std::invalid_argument("averages sum to zero");
  std::vector<Rational> w;
  w.reserve(a.coefs.size());
  Rational max_w = 0;
  for (const auto& c : a.coefs) {
    w.push_back(c / total);
    if (w.back() > max_w) max_w = w.back();
  }
  Rational nn(a.n);
  CubeRootScaled mass{a.tau_hat, nn * nn};
  if (compare(CubeRootScaled{mass.coef * max_w, mass.radicand}, Rational(1)) > 0) {
    throw std::domain_error("condition (2) violated; averages not admissible");
  }
  return ProbSeq::scaled(a.offset, std::move(w), mass);
}

PairCorrelationCheck check_pair_correlation(const ProbSeq& p, std::int64_t n, const Rational& eps) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  const auto& w = p.weights();
  const auto len = static_cast<std::int64_t>(w.size());
  Rational worst;
  std::int64_t worst_m = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    Rational s = 0;
    for (std::int64_t i = 0; i + m < len; ++i) {
      s += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i + m)];
    }
    if (worst_m == 0 || s < worst) {
      worst = s;
      worst_m = m;
    }
  }
  const Rational c = (1 - eps) / ((1 + eps) * (1 + eps));
  PairCorrelationCheck out;
  out.worst_shift = worst_m;
  const CubeRootScaled& mass = p.mass();
  // mass^2 S >= c N^{1/3}  <=>  (coef^2 S)^3 rad^2 >= c^3 N, for c > 0.
  Rational lhs = mass.coef * mass.coef * worst;
  lhs = lhs * lhs * lhs * mass.radicand * mass.radicand;
  out.holds = c <= 0 || lhs >= c * c * c * Rational(n);
  const double m = mass.to_double();
  out.worst_ratio = m * m * worst.get_d() / std::cbrt(static_cast<double>(n));
  return out;
}

}  // namespace diffset
