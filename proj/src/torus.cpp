#include "diffset/torus.hpp"

#include <stdexcept>

namespace diffset {

TorusStepFunction TorusStepFunction::constant(GroupSpec group, Rational value) {
  if (value < 0) throw std::invalid_argument("torus function values must be nonnegative");
  TorusStepFunction h;
  h.cell_coefs.assign(static_cast<std::size_t>(group.order()), value);
  h.group = std::move(group);
  return h;
}

SqrtScaled TorusStepFunction::l1_norm() const {
  Rational s = 0;
  for (const auto& c : cell_coefs) s += c;
  return {s / Rational(group.order()), radicand};
}

Rational TorusStepFunction::autocorrelation_at(std::int64_t x) const {
  Rational s = 0;
  const std::int64_t n = group.order();
  for (std::int64_t y = 0; y < n; ++y) {
    const auto& cy = cell_coefs[static_cast<std::size_t>(y)];
    if (cy == 0) continue;
    const auto& cz = cell_coefs[static_cast<std::size_t>(group.add(y, x))];
    if (cz != 0) s += cy * cz;
  }
  return s * radicand / Rational(n);
}

std::pair<Rational, std::int64_t> TorusStepFunction::autocorrelation_min() const {
  std::pair<Rational, std::int64_t> best{autocorrelation_at(0), 0};
  for (std::int64_t x = 1; x < group.order(); ++x) {
    Rational v = autocorrelation_at(x);
    if (v < best.first) best = {v, x};
  }
  return best;
}

TorusStepFunction group_set_to_torus(const GroupSubset& a, std::int64_t g) {
  if (a.empty()) throw std::invalid_argument("empty set");
  if (g < 1) throw std::invalid_argument("g must be positive");
  TorusStepFunction h;
  h.group = a.group();
  h.cell_coefs.assign(static_cast<std::size_t>(h.group.order()), 0);
  for (auto i : a.indices()) h.cell_coefs[static_cast<std::size_t>(i)] = 1;
  h.radicand = Rational(h.group.order(), g);
  h.radicand.canonicalize();
  return h;
}

}  // namespace diffset
