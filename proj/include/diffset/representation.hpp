#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "diffset/group.hpp"
#include "diffset/int_set.hpp"

namespace diffset {

enum class RepMode { difference, sum };

/// Representation counts r_A (difference) or q_A (sum) over a queried domain.
///
/// Over Z the domain is the closed interval [lo, hi] and counts[i] belongs to
/// shift lo + i. Over a group the domain is every element and counts is indexed
/// by GroupSpec element index.
struct RepProfile {
  RepMode mode = RepMode::difference;
  std::optional<GroupSpec> group;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<std::int64_t> counts;
  std::int64_t min_count = 0;
  std::int64_t max_count = 0;

  /// Count at an integer shift; zero outside the queried interval.
  std::int64_t at(std::int64_t shift) const;
  std::int64_t total() const;
};

/// r_A(m) for m in [lo, hi]. Throws std::invalid_argument("empty set") on an empty A.
RepProfile rep_diff_profile(const IntSet& a, std::int64_t lo, std::int64_t hi);
/// q_A(m) for m in [lo, hi].
RepProfile rep_sum_profile(const IntSet& a, std::int64_t lo, std::int64_t hi);
/// r_A or q_A on every element of the ambient group.
RepProfile group_rep_profile(const GroupSubset& a, RepMode mode);

enum class CertificateMode { difference, sidon };

struct Verdict {
  using Witness = std::variant<std::monostate, std::int64_t, GroupSpec::Element>;

  bool passed = false;
  /// min r_A over the domain (difference) or max q_A (sidon).
  std::int64_t achieved_g = 0;
  /// First violating shift in increasing order; monostate when passed.
  Witness witness;
};

/// Difference mode: r_A(m) >= g for every m in [1, N].
/// Sidon mode: A must lie in [1, N], then q_A(m) <= g for every integer m.
Verdict verify_certificate(const IntSet& a, std::int64_t g, std::int64_t n, CertificateMode mode);
/// Difference mode: r_A(x) >= g for all x in G. Sidon mode: q_A(x) <= g for all x.
Verdict verify_certificate(const GroupSubset& a, std::int64_t g, CertificateMode mode);

}  // namespace diffset
