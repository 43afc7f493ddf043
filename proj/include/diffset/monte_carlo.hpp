#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "diffset/averages.hpp"
#include "diffset/group.hpp"
#include "diffset/rational.hpp"

namespace diffset {

/// Two-sided tail bound for a sum X of independent Boolean variables with
/// mean mu: P(|X - mu| >= delta mu) <= 2 exp(-min(delta^2/4, delta/2) mu).
/// Raw value, may exceed 1.
double chernoff_bound(double delta, double mu);
/// chernoff_bound capped at 1.
double chernoff_probability(double delta, double mu);

/// Splits G so that no part contains both x and x + m (m != 0). Each coset of
/// <m> is walked c, c+m, c+2m, ... and labelled 0,1,2,0,1,2,...; when the
/// coset length is 1 mod 3 its first element moves to part 2. Elements of
/// order two use two alternating parts. Returns the part of every element.
std::vector<int> difference_partition(const GroupSpec& group, std::int64_t m);

/// Part of x for shift m over Z: 0 if x mod 2m lies in [1, m], else 1.
int residue_part(std::int64_t x, std::int64_t m);

struct GroupModel {
  GroupSpec group{GroupSpec::cyclic(1)};
  std::int64_t g = 1;
};

struct SequenceModel {
  ProbSeq probs;
  std::int64_t n = 1;
};

struct RandomModel {
  std::variant<GroupModel, SequenceModel> kind;
  std::uint64_t master_seed = 0;
};

struct MonteCarloOptions {
  std::int64_t trials = 100;
  /// Group model: success needs r_A >= (1 - delta) g everywhere.
  Rational delta{3, 10};
  /// Size slack (both models); sequence model also uses it in the g target.
  Rational epsilon{1, 10};
  /// Relative deviations at which empirical tails are compared to the bound.
  std::vector<double> tail_deltas{0.1, 0.2, 0.3, 0.5};
  /// Shifts monitored for tails in the sequence model.
  std::int64_t monitored_shifts = 16;
  /// 0: DIFFSET_THREADS or hardware concurrency.
  unsigned threads = 0;
};

struct TrialRecord {
  std::int64_t index = 0;
  std::uint64_t seed = 0;
  std::int64_t size = 0;
  std::int64_t achieved_g = 0;
  bool success = false;
};

struct TailRecord {
  std::string event;  // "deviation" or "size"
  double delta = 0.0;
  double frequency = 0.0;
  double bound = 0.0;
  /// bound + 5 sqrt(freq (1 - freq) / trials)
  double limit = 0.0;
  bool ok = false;
};

struct MonteCarloReport {
  std::string model;  // "group" or "sequence"
  std::int64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::int64_t required_g = 0;
  std::int64_t max_size = 0;
  double expected_size = 0.0;
  double success_rate = 0.0;
  std::vector<TrialRecord> per_trial;
  std::vector<TailRecord> tails;
  bool tails_ok = true;
};

/// Draws `trials` sets (trial t keyed by master_seed xor t) and checks each
/// against the model's thresholds. Group model: r_A >= ceil((1-delta) g) on G
/// and |A| <= (1+eps) sqrt(g|G|). Sequence model: |A| <= (1+eps) sum p_i and
/// r_A(m) >= ((1-eps)^2/(1+eps)^2) N^{1/3} for m in [1, N].
MonteCarloReport monte_carlo_validate(const RandomModel& model, const MonteCarloOptions& opts);

/// Thread count from DIFFSET_THREADS, else hardware concurrency, at least 1.
unsigned default_thread_count();

}  // namespace diffset
