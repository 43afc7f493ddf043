#pragma once

#include <cstdint>

#include "diffset/averages.hpp"
#include "diffset/group.hpp"
#include "diffset/int_set.hpp"

namespace diffset {

/// Each element of G independently with probability sqrt(g / |G|); element
/// index i uses counter i of the stream keyed by seed.
GroupSubset random_group_subset(const GroupSpec& group, std::int64_t g, std::uint64_t seed);

/// Each integer i independently with probability p_i.
IntSet sequence_random_set(const ProbSeq& probs, std::uint64_t seed);

/// sqrt(g / |G|).
double group_inclusion_probability(const GroupSpec& group, std::int64_t g);

}  // namespace diffset
