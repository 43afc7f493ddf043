#pragma once

#include <cstdint>
#include <vector>

#include "diffset/group.hpp"
#include "diffset/rational.hpp"

namespace diffset {

/// Function on the torus T^d that is constant on each cell of the grid G,
/// cell volume 1/|G|. Cell value = cell_coefs[index] * sqrt(radicand).
struct TorusStepFunction {
  GroupSpec group{GroupSpec::cyclic(1)};
  std::vector<Rational> cell_coefs;
  Rational radicand{1};

  static TorusStepFunction constant(GroupSpec group, Rational value);

  SqrtScaled l1_norm() const;
  /// Integral of h(t) h(x + t) dt at the grid point x (element index).
  Rational autocorrelation_at(std::int64_t x) const;
  /// Minimum over the torus; the autocorrelation is multilinear on each grid
  /// cell, so the minimum sits on a grid point. Returns (value, element index).
  std::pair<Rational, std::int64_t> autocorrelation_min() const;
};

/// h = sqrt(|G| / g) on the cell of each a in A, zero elsewhere.
/// L1(h) = |A| / sqrt(g |G|) and autocorrelation at x is r_A(x) / g.
TorusStepFunction group_set_to_torus(const GroupSubset& a, std::int64_t g);

}  // namespace diffset
