#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "diffset/group.hpp"
#include "diffset/int_set.hpp"
#include "diffset/parabola.hpp"
#include "diffset/representation.hpp"

namespace diffset {

/// An input set failed the certificate a construction depends on.
class CertificateError : public std::runtime_error {
 public:
  CertificateError(const std::string& what, Verdict verdict)
      : std::runtime_error(what), verdict_(std::move(verdict)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// Lifts A in (Z/p)^2 to C in Z/(p^2 s): every a + cp + bsp with canonical
/// representatives 0 <= a, b <= p-1 and 0 <= c <= s-1. |C| = |A| s, and a
/// g-difference set A yields a g(s-1)-difference set C.
GroupSubset lift_to_cyclic(const GroupSubset& a, std::int64_t s);

struct PipelineReport {
  ParabolaUnion base;
  std::int64_t s = 0;
  GroupSubset lifted{GroupSpec::cyclic(1)};
  /// ceil(k^2 - 2(k-1) - 2k^{3/2}) (s-1); may be <= 0.
  std::int64_t formula_g = 0;
  /// base.verified_g * (s-1).
  std::int64_t inherited_g = 0;
  /// min r_C over Z/(p^2 s), when enumerated.
  std::optional<std::int64_t> verified_g;
  /// |C| / sqrt(verified_g p^2 s); absent when verified_g is absent or zero.
  std::optional<double> ratio;
  /// k = 4s^2 is the width suggested for the asymptotic regime.
  std::int64_t advisory_k = 0;
};

struct PipelineOptions {
  UnionOptions base;
  /// Enumerate r_C when (p^2 s) * |C| stays within this many pair visits.
  std::int64_t verify_cap = 50'000'000;
};

PipelineReport cyclic_pipeline(std::int64_t k, std::int64_t s, std::int64_t p, const PipelineOptions& opts = {});

/// B = {q a + c : a in A, c in [1, q] projecting into C}. Checks both input
/// certificates first and throws CertificateError with the failing verdict.
IntSet blow_up(const IntSet& a, std::int64_t g1, std::int64_t n, const GroupSubset& c, std::int64_t g2);

}  // namespace diffset
