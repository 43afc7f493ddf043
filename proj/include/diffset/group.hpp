#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace diffset {

/// Z/n_1 x ... x Z/n_d given by invariant factors n_1 | n_2 | ... | n_d.
///
/// Elements are addressed either as residue vectors or as a dense index in
/// [0, order). The index is mixed-radix with the last coordinate least
/// significant, so index order is lexicographic order on residue vectors.
class GroupSpec {
 public:
  using Element = std::vector<std::int64_t>;

  explicit GroupSpec(std::vector<std::int64_t> invariant_factors);
  static GroupSpec cyclic(std::int64_t n) { return GroupSpec({n}); }

  std::span<const std::int64_t> invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }
  bool is_cyclic() const { return factors_.size() == 1; }

  /// Reduces each coordinate into [0, n_i) first.
  std::int64_t index_of(std::span<const std::int64_t> element) const;
  Element element_at(std::int64_t index) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const { return sub(0, a); }
  /// Order of the element, i.e. size of the cyclic subgroup it generates.
  std::int64_t element_order(std::int64_t index) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
};

/// A subset of a finite abelian group, kept as sorted element indices.
class GroupSubset {
 public:
  explicit GroupSubset(GroupSpec group) : group_(std::move(group)) {}
  /// Coordinates are reduced; two vectors reducing to the same element throw.
  GroupSubset(GroupSpec group, const std::vector<GroupSpec::Element>& elements);
  static GroupSubset from_indices(GroupSpec group, std::vector<std::int64_t> indices);
  static GroupSubset whole(GroupSpec group);

  const GroupSpec& group() const { return group_; }
  std::span<const std::int64_t> indices() const { return indices_; }
  std::vector<GroupSpec::Element> elements() const;
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains_index(std::int64_t index) const;

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;

 private:
  GroupSpec group_;
  std::vector<std::int64_t> indices_;
};

}  // namespace diffset
