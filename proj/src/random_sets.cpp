#include "diffset/random_sets.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diffset/random_stream.hpp"

namespace diffset {

double group_inclusion_probability(const GroupSpec& group, std::int64_t g) {
  if (g < 1 || g > group.order()) throw std::invalid_argument("need 1 <= g <= |G|");
  if (g == group.order()) return 1.0;
  return std::sqrt(static_cast<double>(g) / static_cast<double>(group.order()));
}

GroupSubset random_group_subset(const GroupSpec& group, std::int64_t g, std::uint64_t seed) {
  const double p = group_inclusion_probability(group, g);
  CounterStream stream(seed);
  std::vector<std::int64_t> chosen;
  for (std::int64_t i = 0; i < group.order(); ++i) {
    if (stream.bernoulli(static_cast<std::uint64_t>(i), p)) chosen.push_back(i);
  }
  return GroupSubset::from_indices(group, std::move(chosen));
}

IntSet sequence_random_set(const ProbSeq& probs, std::uint64_t seed) {
  CounterStream stream(seed);
  std::vector<std::int64_t> chosen;
  auto p = probs.probabilities();
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::int64_t i = probs.offset() + static_cast<std::int64_t>(k);
    if (p[k] > 0.0 && stream.bernoulli(CounterStream::counter_of(i), p[k])) chosen.push_back(i);
  }
  return IntSet(std::move(chosen));
}

}  // namespace diffset
