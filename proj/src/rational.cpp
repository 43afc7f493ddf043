#include "diffset/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace diffset {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("malformed rational: empty");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    bool negative = !whole.empty() && whole.front() == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    digits += frac;
    Integer num = parse_integer(digits);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(num, den);
    r.canonicalize();
    if (negative && r > 0) r = -r;
    return r;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  return Rational(value);
}

double to_double(const Rational& value) { return value.get_d(); }

Integer floor_sqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer ceil_sqrt(const Integer& n) {
  Integer r = floor_sqrt(n);
  if (r * r < n) ++r;
  return r;
}

Rational floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

Rational ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

Integer ceil_sqrt(const Rational& x) {
  if (x < 0) throw std::domain_error("square root of a negative rational");
  // c >= sqrt(p/q)  <=>  c^2 q >= p
  Integer num = x.get_num(), den = x.get_den();
  Integer c = ceil_sqrt(Integer(num * den)) / den;
  while (c * c * den < num) ++c;
  while (c > 0 && (c - 1) * (c - 1) * den >= num) --c;
  return c;
}

Integer ceil_cbrt(const Rational& x) {
  if (x < 0) throw std::domain_error("cube root of a negative rational");
  Integer num = x.get_num(), den = x.get_den();
  Integer c;
  mpz_root(c.get_mpz_t(), Integer(num / den).get_mpz_t(), 3);
  while (c * c * c * den < num) ++c;
  while (c > 0 && (c - 1) * (c - 1) * (c - 1) * den >= num) --c;
  return c;
}

double SqrtScaled::to_double() const { return coef.get_d() * std::sqrt(radicand.get_d()); }

bool operator==(const SqrtScaled& a, const SqrtScaled& b) {
  return a.sign() == b.sign() && a.squared() == b.squared();
}

std::strong_ordering compare(const SqrtScaled& a, const Rational& b) {
  int sa = a.sign();
  int sb = sgn(b);
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  Rational a2 = a.squared();
  Rational b2 = b * b;
  auto mag = cmp(a2, b2) <=> 0;
  return sa > 0 ? mag : 0 <=> cmp(a2, b2);
}

double CubeRootScaled::to_double() const { return coef.get_d() * std::cbrt(radicand.get_d()); }

std::strong_ordering compare(const CubeRootScaled& a, const Rational& b) {
  // x -> x^3 is strictly increasing, so compare cubes.
  Rational b3 = b * b * b;
  return cmp(a.cubed(), b3) <=> 0;
}

}  // namespace diffset
