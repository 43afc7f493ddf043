#include "diffset/int_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diffset {

IntSet::IntSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end()) {
    throw std::invalid_argument("duplicate element " + std::to_string(*dup) + " in integer set");
  }
}

IntSet::IntSet(std::initializer_list<std::int64_t> elements)
    : IntSet(std::vector<std::int64_t>(elements)) {}

bool IntSet::contains(std::int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

IntSet IntSet::translated(std::int64_t t) const {
  IntSet out;
  out.elements_.reserve(elements_.size());
  for (auto a : elements_) out.elements_.push_back(a + t);
  return out;
}

}  // namespace diffset
