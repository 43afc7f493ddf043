#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace diffset {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "1.6" into an exact rational.
Rational parse_rational(std::string_view text);

/// num / den in lowest terms; den != 0. GMP requires canonical operands.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical "p/q" form; the denominator is always printed.
std::string to_string(const Rational& value);

Rational from_double(double value);
double to_double(const Rational& value);

Integer floor_sqrt(const Integer& n);
Integer ceil_sqrt(const Integer& n);

/// Smallest integer c with c >= sqrt(x), x >= 0.
Integer ceil_sqrt(const Rational& x);
/// Smallest integer c with c >= cbrt(x), x >= 0.
Integer ceil_cbrt(const Rational& x);

Rational floor(const Rational& x);
Rational ceil(const Rational& x);

/// coef * sqrt(radicand), radicand >= 0. Used for step functions whose height
/// is sqrt(N/g): every integral stays exact.
struct SqrtScaled {
  Rational coef{0};
  Rational radicand{1};

  /// coef^2 * radicand, i.e. the square of the value (sign dropped).
  Rational squared() const { return coef * coef * radicand; }
  int sign() const { return radicand == 0 ? 0 : sgn(coef); }
  double to_double() const;

  friend bool operator==(const SqrtScaled& a, const SqrtScaled& b);
};

/// Three-way comparison of a sqrt-scaled value against a rational, exact.
std::strong_ordering compare(const SqrtScaled& a, const Rational& b);

/// coef * cbrt(radicand), radicand >= 0.
struct CubeRootScaled {
  Rational coef{1};
  Rational radicand{1};

  Rational cubed() const { return coef * coef * coef * radicand; }
  double to_double() const;
};

std::strong_ordering compare(const CubeRootScaled& a, const Rational& b);

}  // namespace diffset
