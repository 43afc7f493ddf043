#pragma once

#include <cstdint>

#include "diffset/group.hpp"

namespace diffset {

/// A_u = {(x, x^2 / u) : x in Z/p} inside (Z/p)^2.
GroupSubset parabola_set(std::int64_t p, std::int64_t u);

/// Number of ways to write target = a1 - a2 with a1 in A_u, a2 in A_v.
struct PairCount {
  std::int64_t count = 0;
  /// For u != v: count = 1 + legendre(discriminant, p) with
  /// discriminant = 4uv(a^2 - b(u - v)) reduced mod p.
  bool via_discriminant = false;
  std::int64_t discriminant = 0;
  int legendre = 0;
};

PairCount pair_rep_count(std::int64_t p, std::int64_t u, std::int64_t v, std::int64_t a, std::int64_t b);

/// S_t = sum over |l| <= k-1 of |sum_{i-j=l, 1<=i,j<=k} legendre((t+i)(t+j), p)|.
std::int64_t shift_score(std::int64_t p, std::int64_t k, std::int64_t t);

/// ceil(k^2 - 2(k-1) - 2 k^{3/2}), computed exactly.
std::int64_t parabola_guarantee(std::int64_t k);

enum class Enumeration { exhaustive, sampled };

struct ParabolaUnion {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t t = 0;
  std::int64_t score = 0;  // S_t
  GroupSubset set{GroupSpec::cyclic(1)};
  /// Formula value ceil(k^2 - 2(k-1) - 2k^{3/2}); only meaningful when !vacuous.
  std::int64_t guaranteed_g = 0;
  /// True when S_t >= 2k^{3/2} or the formula value is <= 0.
  bool vacuous = true;
  /// min over nonzero targets of r_A, exact or over a seeded sample.
  std::int64_t verified_g = 0;
  Enumeration enumeration = Enumeration::exhaustive;
  /// k^2 - 2(k-1) - S_t, the instance lower bound the construction certifies.
  std::int64_t instance_bound = 0;
  bool instance_bound_holds = false;
};

struct UnionOptions {
  /// Full enumeration of r_A when p^2 does not exceed this.
  std::int64_t enumeration_cap = 1'000'000;
  /// Targets checked above the cap.
  std::int64_t sample_size = 4096;
  std::uint64_t seed = 0;
};

/// Scans every admissible shift 0 <= t <= p-k-1, keeps the smallest t with
/// minimal S_t, and assembles A = union of A_u for u = t+1..t+k.
ParabolaUnion best_shift_union(std::int64_t p, std::int64_t k, const UnionOptions& opts = {});

/// Union of A_u for u = t+1..t+k at a fixed shift.
GroupSubset parabola_union_set(std::int64_t p, std::int64_t k, std::int64_t t);

}  // namespace diffset
