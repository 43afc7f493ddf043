#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diffset/rational.hpp"
#include "diffset/step_function.hpp"

namespace diffset {

/// Windowed means a_i = (N / 2L) * integral of f over [(i-L)/N, (i+L)/N].
///
/// Values are stored as coefficients of sqrt(radicand), inherited from f.
struct AveragesSeq {
  std::int64_t n = 0;
  std::int64_t window = 0;  // L = ceil((tau_hat / 2) N^{2/3})
  Rational tau_hat;
  /// Horizontal dilation applied to f before averaging (1 when none).
  Rational stretch{1};
  std::int64_t offset = 0;  // index of coefs[0]
  std::vector<Rational> coefs;
  Rational radicand{1};

  Rational coef_at(std::int64_t i) const;
  std::int64_t first_index() const { return offset; }
  std::int64_t last_index() const { return offset + static_cast<std::int64_t>(coefs.size()) - 1; }
  SqrtScaled sum() const;
  /// stretch - 1, the slack the dilation adds to the L1 mass.
  Rational realized_epsilon() const { return stretch - 1; }
};

/// The three admissibility conditions on the averages.
struct AveragesConditions {
  /// sum a_i <= N tau_hat (1 + eps) with eps = stretch - 1.
  SqrtScaled sum;
  Rational sum_bound;
  bool sum_ok = false;
  /// max a_i <= sum a_i / (tau_hat N^{2/3}).
  Rational max_share;  // max a_i / sum a_i
  bool max_ok = false;
  /// min over 1 <= m <= m_max of sum a_i a_{i+m} >= ((2L-1)/2L) N.
  /// Absent when the pair sums exceed the evaluation budget.
  std::int64_t m_max = 0;
  std::optional<Rational> min_pair_sum;
  std::optional<std::int64_t> min_pair_shift;
  Rational pair_bound;
  std::optional<bool> pair_ok;
};

struct AveragesResult {
  AveragesSeq seq;
  AveragesConditions conditions;
};

struct AveragesOptions {
  bool stretch = false;
  /// Upper limit on (support length) * m_max rational products for condition three.
  std::int64_t pair_budget = 20'000'000;
};

/// L = ceil((tau_hat / 2) N^{2/3}), exact.
std::int64_t averaging_window(std::int64_t n, const Rational& tau_hat);

/// Requires f to pass check_autocorrelation_family and 2L - 1 < N.
/// With stretch, f is dilated by N / (N - 2L + 1) first so the pair condition
/// covers every m in [1, N]; otherwise m runs over [1, N - 2L + 1].
AveragesResult local_averages(const StepFunction& f, std::int64_t n, const Rational& tau_hat,
                              const AveragesOptions& opts = {});

/// Inclusion probabilities p_i = mass * w_i.
///
/// mass is carried as coef * cbrt(radicand) so that tau N^{2/3} stays exact.
class ProbSeq {
 public:
  ProbSeq() = default;
  /// Plain probabilities; throws unless every entry is in [0, 1].
  static ProbSeq from_probabilities(std::int64_t offset, std::vector<Rational> p);
  /// p_i = mass * weights_i; throws unless every p_i is in [0, 1].
  static ProbSeq scaled(std::int64_t offset, std::vector<Rational> weights, CubeRootScaled mass);

  std::int64_t offset() const { return offset_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const CubeRootScaled& mass() const { return mass_; }
  /// Floating-point view for sampling and tail estimates.
  std::span<const double> probabilities() const { return probs_; }
  double probability(std::int64_t i) const;
  double expected_size() const;
  const Rational& weight_sum() const { return weight_sum_; }

 private:
  std::int64_t offset_ = 0;
  std::vector<Rational> weights_;
  CubeRootScaled mass_;
  std::vector<double> probs_;
  Rational weight_sum_{0};
};

/// p_i = tau_hat N^{2/3} a_i / sum a_j, so sum p_i = tau_hat N^{2/3} exactly.
/// Throws std::domain_error("condition (2) violated; averages not admissible")
/// if some p_i exceeds 1.
ProbSeq averages_to_probs(const AveragesSeq& a);

struct PairCorrelationCheck {
  bool holds = false;
  std::int64_t worst_shift = 0;
  double worst_ratio = 0.0;  // sum p_i p_{i+m} / N^{1/3} at the worst shift
};

/// Exact check that sum p_i p_{i+m} >= ((1-eps)/(1+eps)^2) N^{1/3} for m in [1, N].
PairCorrelationCheck check_pair_correlation(const ProbSeq& p, std::int64_t n, const Rational& eps);

}  // namespace diffset
