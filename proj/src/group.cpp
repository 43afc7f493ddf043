#include "diffset/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace diffset {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  if (factors_.empty()) throw std::invalid_argument("group needs at least one invariant factor");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 1) throw std::invalid_argument("invariant factors must be >= 1");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0) {
      throw std::invalid_argument("invariant factor " + std::to_string(factors_[i]) +
                                  " does not divide " + std::to_string(factors_[i + 1]));
    }
  }
  strides_.assign(factors_.size(), 1);
  order_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    if (order_ > (std::int64_t{1} << 40) / factors_[i]) {
      throw std::invalid_argument("group order too large");
    }
    order_ *= factors_[i];
  }
}

std::int64_t GroupSpec::index_of(std::span<const std::int64_t> element) const {
  if (element.size() != factors_.size()) {
    throw std::invalid_argument("element has " + std::to_string(element.size()) +
                                " coordinates, group has rank " + std::to_string(factors_.size()));
  }
  std::int64_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index += mod(element[i], factors_[i]) * strides_[i];
  return index;
}

GroupSpec::Element GroupSpec::element_at(std::int64_t index) const {
  Element e(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) e[i] = (index / strides_[i]) % factors_[i];
  return e;
}

std::int64_t GroupSpec::add(std::int64_t a, std::int64_t b) const {
  if (factors_.size() == 1) return mod(a + b, order_);
  std::int64_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t x = (a / strides_[i]) % factors_[i];
    std::int64_t y = (b / strides_[i]) % factors_[i];
    index += mod(x + y, factors_[i]) * strides_[i];
  }
  return index;
}

std::int64_t GroupSpec::sub(std::int64_t a, std::int64_t b) const {
  if (factors_.size() == 1) return mod(a - b, order_);
  std::int64_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t x = (a / strides_[i]) % factors_[i];
    std::int64_t y = (b / strides_[i]) % factors_[i];
    index += mod(x - y, factors_[i]) * strides_[i];
  }
  return index;
}

std::int64_t GroupSpec::element_order(std::int64_t index) const {
  std::int64_t result = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t x = (index / strides_[i]) % factors_[i];
    std::int64_t ord = factors_[i] / std::gcd(x, factors_[i]);
    result = std::lcm(result, ord);
  }
  return result;
}

GroupSubset::GroupSubset(GroupSpec group, const std::vector<GroupSpec::Element>& elements)
    : group_(std::move(group)) {
  indices_.reserve(elements.size());
  for (const auto& e : elements) indices_.push_back(group_.index_of(e));
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("duplicate element in group subset");
  }
}

GroupSubset GroupSubset::from_indices(GroupSpec group, std::vector<std::int64_t> indices) {
  GroupSubset out(std::move(group));
  for (auto i : indices) {
    if (i < 0 || i >= out.group_.order()) throw std::invalid_argument("element index out of range");
  }
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw std::invalid_argument("duplicate element in group subset");
  }
  out.indices_ = std::move(indices);
  return out;
}

GroupSubset GroupSubset::whole(GroupSpec group) {
  std::vector<std::int64_t> all(static_cast<std::size_t>(group.order()));
  std::iota(all.begin(), all.end(), 0);
  return from_indices(std::move(group), std::move(all));
}

std::vector<GroupSpec::Element> GroupSubset::elements() const {
  std::vector<GroupSpec::Element> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(group_.element_at(i));
  return out;
}

bool GroupSubset::contains_index(std::int64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

}  // namespace diffset
