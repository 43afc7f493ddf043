#include "diffset/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace diffset {

BoundsLedger BoundsLedger::standard() {
  BoundsLedger ledger;
  ledger.validate();
  return ledger;
}

void BoundsLedger::validate() const {
  for (const Interval* iv : {&sigma, &tau, &g2_constants}) {
    if (!(iv->lower < iv->upper)) throw std::logic_error("bounds ledger interval is not proper");
  }
}

std::int64_t least_integer_above_half_plus_sqrt(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("negative radicand");
  Integer mm(static_cast<long>(m));
  Integer s = floor_sqrt(mm);
  // 1/2 + sqrt(m) is s + 1/2 or irrational, never an integer, so the answer
  // is floor(1/2 + sqrt(m)) + 1.  sqrt(m) < s + 1/2  <=>  m <= s^2 + s.
  Integer fl = (mm <= s * s + s) ? s : Integer(s + 1);
  return fl.get_si() + 1;
}

TrivialBounds trivial_bounds(std::int64_t g, std::int64_t n) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  if (n < 1) throw std::invalid_argument("N must be positive");
  TrivialBounds b;
  Integer x(static_cast<long>(2 * g));
  x *= static_cast<long>(n);
  b.sqrt_value = std::sqrt(x.get_d());
  b.eta_lb = ceil_sqrt(x).get_si();
  b.beta_ub = floor_sqrt(x).get_si();
  return b;
}

TrivialBounds trivial_bounds(std::int64_t g, const GroupSpec& group) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  TrivialBounds b;
  Integer x(static_cast<long>(g));
  x *= static_cast<long>(group.order());
  b.sqrt_value = std::sqrt(x.get_d());
  b.gamma_lb = ceil_sqrt(x).get_si();
  b.alpha_ub = floor_sqrt(x).get_si();
  b.gamma_strict_lb = least_integer_above_half_plus_sqrt(g * (group.order() - 1));
  if (g > group.order()) b.warnings.push_back("gamma_g(G) may not exist: g exceeds |G|");
  return b;
}

}  // namespace diffset
