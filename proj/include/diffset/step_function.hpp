#pragma once

#include <cstdint>
#include <vector>

#include "diffset/int_set.hpp"
#include "diffset/rational.hpp"

namespace diffset {

/// Nonnegative piecewise-constant function on R with finite support.
///
/// On [b_{i-1}, b_i) the function equals coef_i * sqrt(radicand); it is zero
/// outside [b_0, b_k). Keeping the sqrt factor symbolic lets heights such as
/// sqrt(N/g) produce exact integrals: anything quadratic in f is rational.
class StepFunction {
 public:
  StepFunction() = default;
  /// Throws std::invalid_argument unless breakpoints strictly increase,
  /// coefs has one entry per piece, coefs >= 0 and radicand > 0.
  StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> coefs, Rational radicand = 1);

  /// Constant c on [lo, hi).
  static StepFunction box(Rational lo, Rational hi, Rational c);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& coefs() const { return coefs_; }
  const Rational& radicand() const { return radicand_; }
  bool has_sqrt_scale() const { return radicand_ != 1; }
  std::size_t pieces() const { return coefs_.size(); }
  bool is_zero() const;

  /// Smallest closed interval outside of which f vanishes; requires !is_zero().
  Rational support_lo() const;
  Rational support_hi() const;

  SqrtScaled value_at(const Rational& x) const;
  SqrtScaled l1_norm() const;
  /// Integral of f over (-inf, x], as a multiple of sqrt(radicand).
  Rational cumulative_coef(const Rational& x) const;

  /// x -> f(x / s), s > 0.
  StepFunction dilated(const Rational& s) const;
  /// Least common denominator of all breakpoints.
  Integer grid_denominator() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> coefs_;
  Rational radicand_{1};
};

/// f = sqrt(N/g) on the union of [a/N, (a+1)/N), a in A. L1 = |A| / sqrt(gN).
StepFunction set_to_step(const IntSet& a, std::int64_t g, std::int64_t n);

/// (f correlated with f)(x) = integral of f(t) f(x+t) dt, exact.
Rational autocorrelation(const StepFunction& f, const Rational& x);
/// (f*f)(x) = integral of f(t) f(x-t) dt, exact.
Rational autoconvolution(const StepFunction& f, const Rational& x);

struct Extremum {
  Rational value;
  Rational at;
};

/// Minimum of f correlated with f over [lo, hi]. The function is piecewise
/// linear with kinks at breakpoint differences, so the minimum is attained at
/// one of those or at an endpoint. When every breakpoint lies on a grid 1/D
/// with few points in [lo, hi], only the grid points are evaluated.
Extremum autocorrelation_min(const StepFunction& f, const Rational& lo, const Rational& hi);
/// Same minimum computed from breakpoint differences only, never the grid.
Extremum autocorrelation_min_breakpoints(const StepFunction& f, const Rational& lo, const Rational& hi);

/// Maximum of f*f over R; attained at a sum of two breakpoints.
Extremum autoconvolution_max(const StepFunction& f);

struct FamilyVerdict {
  bool member = false;
  Extremum extremum;
};

/// Membership in the autocorrelation family: (f correlated with f) >= 1 on [0, 1].
FamilyVerdict check_autocorrelation_family(const StepFunction& f);
/// Membership in the autoconvolution family: support in [0, 1] and f*f <= 1.
/// Throws std::invalid_argument when the support leaves [0, 1].
FamilyVerdict check_autoconvolution_family(const StepFunction& f);

}  // namespace diffset
