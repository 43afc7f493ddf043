#pragma once

#include <cstdint>

namespace diffset {

/// Counter-based random stream: the draw for counter i depends only on
/// (key, i), so inclusion decisions do not depend on iteration order.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform(std::uint64_t counter) const;
  /// Uniform integer in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const;
  /// Bernoulli(p) draw; p >= 1 always succeeds, p <= 0 never does.
  bool bernoulli(std::uint64_t counter, double p) const { return uniform(counter) < p; }

  /// Counter for a signed index (zigzag encoding).
  static std::uint64_t counter_of(std::int64_t index) {
    return (static_cast<std::uint64_t>(index) << 1) ^ static_cast<std::uint64_t>(index >> 63);
  }

 private:
  std::uint64_t key_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Per-trial key: master seed xor trial index.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) { return master ^ trial; }

}  // namespace diffset
