#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffset/group.hpp"
#include "diffset/rational.hpp"

namespace diffset {

struct Interval {
  Rational lower;
  Rational upper;
};

/// Published numerical ranges for the extremal constants.
struct BoundsLedger {
  /// sup of the L1 norm over nonnegative f on [0,1] with f*f <= 1.
  Interval sigma{ratio(1147, 1000), ratio(1252, 1000)};
  /// inf of the L1 norm over nonnegative f on R with (f correlated with f) >= 1 on [0,1].
  Interval tau{ratio(1560, 1000), ratio(1643, 1000)};
  /// g = 2 difference sets: sqrt(c_lo n) <= eta_2(N) <= sqrt(c_hi n) for large N.
  Interval g2_constants{ratio(2435, 1000), ratio(2645, 1000)};

  static BoundsLedger standard();
  /// Throws std::logic_error if an interval is not proper.
  void validate() const;
};

/// Counting bounds: sqrt(2gN) for sets over Z, sqrt(g|G|) for groups.
struct TrivialBounds {
  double sqrt_value = 0.0;
  // Integer interval mode.
  std::optional<std::int64_t> eta_lb;   // ceil(sqrt(2gN))
  std::optional<std::int64_t> beta_ub;  // floor(sqrt(2gN))
  // Group mode.
  std::optional<std::int64_t> gamma_lb;         // ceil(sqrt(g|G|))
  std::optional<std::int64_t> alpha_ub;         // floor(sqrt(g|G|))
  std::optional<std::int64_t> gamma_strict_lb;  // least integer > 1/2 + sqrt(g(|G|-1))
  std::vector<std::string> warnings;
};

TrivialBounds trivial_bounds(std::int64_t g, std::int64_t n);
TrivialBounds trivial_bounds(std::int64_t g, const GroupSpec& group);

/// Least integer strictly greater than 1/2 + sqrt(m), m >= 0.
std::int64_t least_integer_above_half_plus_sqrt(std::int64_t m);

}  // namespace diffset
