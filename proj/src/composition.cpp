#include "diffset/composition.hpp"

#include <cmath>
#include <vector>

namespace diffset {

GroupSubset lift_to_cyclic(const GroupSubset& a, std::int64_t s) {
  const auto f = a.group().invariant_factors();
  if (f.size() != 2 || f[0] != f[1]) throw std::invalid_argument("lift expects a subset of (Z/p)^2");
  if (s < 1) throw std::invalid_argument("s must be positive");
  const std::int64_t p = f[0];
  const std::int64_t n = p * p * s;
  std::vector<std::int64_t> out;
  out.reserve(a.size() * static_cast<std::size_t>(s));
  for (const auto& e : a.elements()) {
    for (std::int64_t c = 0; c < s; ++c) out.push_back((e[0] + c * p + e[1] * s * p) % n);
  }
  return GroupSubset::from_indices(GroupSpec::cyclic(n), std::move(out));
}

PipelineReport cyclic_pipeline(std::int64_t k, std::int64_t s, std::int64_t p, const PipelineOptions& opts) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  PipelineReport r;
  r.base = best_shift_union(p, k, opts.base);
  r.s = s;
  r.lifted = lift_to_cyclic(r.base.set, s);
  r.formula_g = parabola_guarantee(k) * (s - 1);
  r.inherited_g = r.base.verified_g * (s - 1);
  r.advisory_k = 4 * s * s;
  const auto order = r.lifted.group().order();
  const auto size = static_cast<std::int64_t>(r.lifted.size());
  if (size <= opts.verify_cap / std::max<std::int64_t>(size, 1)) {
    RepProfile prof = group_rep_profile(r.lifted, RepMode::difference);
    r.verified_g = prof.min_count;
    if (prof.min_count > 0) {
      r.ratio = static_cast<double>(size) / std::sqrt(static_cast<double>(prof.min_count) * order);
    }
  }
  return r;
}

IntSet blow_up(const IntSet& a, std::int64_t g1, std::int64_t n, const GroupSubset& c, std::int64_t g2) {
  if (!c.group().is_cyclic()) throw std::invalid_argument("blow-up expects C in a cyclic group");
  Verdict va = verify_certificate(a, g1, n, CertificateMode::difference);
  if (!va.passed) throw CertificateError("A is not a g1-difference set for [N]", va);
  Verdict vc = verify_certificate(c, g2, CertificateMode::difference);
  if (!vc.passed) throw CertificateError("C is not a g2-difference set", vc);
  const std::int64_t q = c.group().order();
  std::vector<std::int64_t> out;
  out.reserve(a.size() * c.size());
  for (auto x : a.elements()) {
    for (auto r : c.indices()) out.push_back(q * x + (r == 0 ? q : r));
  }
  return IntSet(std::move(out));
}

}  // namespace diffset
