#include "diffset/representation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diffset {

namespace {

void require_nonempty(std::size_t size) {
  if (size == 0) throw std::invalid_argument("empty set");
}

void require_interval(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty shift interval");
  if (hi - lo > (std::int64_t{1} << 32)) throw std::invalid_argument("shift interval too long");
}

void finish(RepProfile& p) {
  if (p.counts.empty()) return;
  auto [mn, mx] = std::minmax_element(p.counts.begin(), p.counts.end());
  p.min_count = *mn;
  p.max_count = *mx;
}

}  // namespace

std::int64_t RepProfile::at(std::int64_t shift) const {
  if (group) {
    if (shift < 0 || shift >= group->order()) return 0;
    return counts[static_cast<std::size_t>(shift)];
  }
  if (shift < lo || shift > hi) return 0;
  return counts[static_cast<std::size_t>(shift - lo)];
}

std::int64_t RepProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

RepProfile rep_diff_profile(const IntSet& a, std::int64_t lo, std::int64_t hi) {
  require_nonempty(a.size());
  require_interval(lo, hi);
  RepProfile p;
  p.mode = RepMode::difference;
  p.lo = lo;
  p.hi = hi;
  p.counts.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  auto e = a.elements();
  const std::int64_t span = a.max() - a.min();
  // Differences are confined to [-span, span]; only pairs inside [lo, hi] matter.
  const std::int64_t top = std::min(hi, span);
  const std::int64_t bottom = std::max(lo, -span);
  if (bottom <= 0 && 0 <= top) p.counts[static_cast<std::size_t>(-lo)] = static_cast<std::int64_t>(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    for (std::size_t i = j + 1; i < e.size(); ++i) {
      std::int64_t d = e[i] - e[j];
      if (d > top && d > -bottom) break;
      if (d >= lo && d <= hi) ++p.counts[static_cast<std::size_t>(d - lo)];
      if (-d >= lo && -d <= hi) ++p.counts[static_cast<std::size_t>(-d - lo)];
    }
  }
  finish(p);
  return p;
}

RepProfile rep_sum_profile(const IntSet& a, std::int64_t lo, std::int64_t hi) {
  require_nonempty(a.size());
  require_interval(lo, hi);
  RepProfile p;
  p.mode = RepMode::sum;
  p.lo = lo;
  p.hi = hi;
  p.counts.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  auto e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i; j < e.size(); ++j) {
      std::int64_t s = e[i] + e[j];
      if (s > hi) break;
      if (s < lo) continue;
      p.counts[static_cast<std::size_t>(s - lo)] += (i == j) ? 1 : 2;
    }
  }
  finish(p);
  return p;
}

RepProfile group_rep_profile(const GroupSubset& a, RepMode mode) {
  const GroupSpec& g = a.group();
  RepProfile p;
  p.mode = mode;
  p.group = g;
  p.lo = 0;
  p.hi = g.order() - 1;
  p.counts.assign(static_cast<std::size_t>(g.order()), 0);
  auto idx = a.indices();
  if (g.is_cyclic()) {
    const std::int64_t n = g.order();
    // Indices lie in [0, n), so one correction step reduces x - y or x + y.
    auto* counts = p.counts.data();
    if (mode == RepMode::difference) {
      for (auto x : idx) {
        for (auto y : idx) {
          std::int64_t v = x - y;
          ++counts[v < 0 ? v + n : v];
        }
      }
    } else {
      for (auto x : idx) {
        for (auto y : idx) {
          std::int64_t v = x + y;
          ++counts[v >= n ? v - n : v];
        }
      }
    }
  } else {
    for (auto x : idx) {
      for (auto y : idx) {
        std::int64_t v = mode == RepMode::difference ? g.sub(x, y) : g.add(x, y);
        ++p.counts[static_cast<std::size_t>(v)];
      }
    }
  }
  finish(p);
  return p;
}

Verdict verify_certificate(const IntSet& a, std::int64_t g, std::int64_t n, CertificateMode mode) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  if (n < 1) throw std::invalid_argument("N must be positive");
  Verdict v;
  if (mode == CertificateMode::difference) {
    RepProfile p = rep_diff_profile(a, 1, n);
    v.achieved_g = p.min_count;
    v.passed = p.min_count >= g;
    if (!v.passed) {
      auto it = std::find_if(p.counts.begin(), p.counts.end(), [g](auto c) { return c < g; });
      v.witness = std::int64_t{1} + (it - p.counts.begin());
    }
    return v;
  }
  require_nonempty(a.size());
  if (a.min() < 1 || a.max() > n) throw std::invalid_argument("support outside [1,N]");
  // q_A vanishes off [2, 2N] when A lies in [1, N].
  RepProfile p = rep_sum_profile(a, 2, 2 * n);
  v.achieved_g = p.max_count;
  v.passed = p.max_count <= g;
  if (!v.passed) {
    auto it = std::find_if(p.counts.begin(), p.counts.end(), [g](auto c) { return c > g; });
    v.witness = std::int64_t{2} + (it - p.counts.begin());
  }
  return v;
}

Verdict verify_certificate(const GroupSubset& a, std::int64_t g, CertificateMode mode) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  require_nonempty(a.size());
  const bool diff = mode == CertificateMode::difference;
  RepProfile p = group_rep_profile(a, diff ? RepMode::difference : RepMode::sum);
  Verdict v;
  v.achieved_g = diff ? p.min_count : p.max_count;
  v.passed = diff ? p.min_count >= g : p.max_count <= g;
  if (!v.passed) {
    auto it = std::find_if(p.counts.begin(), p.counts.end(),
                           [&](auto c) { return diff ? c < g : c > g; });
    v.witness = a.group().element_at(it - p.counts.begin());
  }
  return v;
}

}  // namespace diffset
