#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace diffset {

/// A finite set of integers, stored sorted ascending without repeats.
class IntSet {
 public:
  IntSet() = default;
  /// Sorts the input; throws std::invalid_argument on a repeated element.
  explicit IntSet(std::vector<std::int64_t> elements);
  IntSet(std::initializer_list<std::int64_t> elements);

  std::span<const std::int64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }
  bool contains(std::int64_t x) const;

  IntSet translated(std::int64_t t) const;

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

}  // namespace diffset
