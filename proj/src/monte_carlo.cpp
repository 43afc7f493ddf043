#include "diffset/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "diffset/random_sets.hpp"
#include "diffset/random_stream.hpp"
#include "diffset/representation.hpp"

namespace diffset {

double chernoff_bound(double delta, double mu) {
  return 2.0 * std::exp(-std::min(delta * delta / 4.0, delta / 2.0) * mu);
}

double chernoff_probability(double delta, double mu) { return std::min(1.0, chernoff_bound(delta, mu)); }

std::vector<int> difference_partition(const GroupSpec& group, std::int64_t m) {
  if (m <= 0 || m >= group.order()) throw std::invalid_argument("shift must be a nonzero element");
  const std::int64_t h = group.element_order(m);
  std::vector<int> part(static_cast<std::size_t>(group.order()), -1);
  for (std::int64_t c = 0; c < group.order(); ++c) {
    if (part[static_cast<std::size_t>(c)] != -1) continue;
    std::int64_t x = c;
    for (std::int64_t j = 0; j < h; ++j) {
      int label = h == 2 ? static_cast<int>(j % 2) : static_cast<int>(j % 3);
      if (j == 0 && h != 2 && h % 3 == 1) label = 2;
      part[static_cast<std::size_t>(x)] = label;
      x = group.add(x, m);
    }
  }
  return part;
}

int residue_part(std::int64_t x, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("shift must be positive");
  std::int64_t r = (x - 1) % (2 * m);
  if (r < 0) r += 2 * m;
  return r < m ? 0 : 1;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("DIFFSET_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Largest s with s^2 <= x.
std::int64_t floor_sqrt_rational(const Rational& x) {
  Integer s = ceil_sqrt(x);
  if (Rational(s * s) > x) --s;
  return s.get_si();
}

// Largest s with s^3 <= x.
std::int64_t floor_cbrt_rational(const Rational& x) {
  Integer s = ceil_cbrt(x);
  if (Rational(s * s * s) > x) --s;
  return s.get_si();
}

double union_bound(double delta, const std::vector<double>& part_means) {
  double b = 0.0;
  for (double mu : part_means) b += chernoff_bound(delta, mu);
  return std::min(1.0, b);
}

template <typename Fn>
void run_trials(std::int64_t trials, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (threads == 1) {
    for (std::int64_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t t = next++; t < trials; t = next++) fn(t);
    });
  }
}

struct TailCounts {
  std::vector<std::int64_t> deviation;  // per tail delta
  bool size_event = false;
};

void finish_tails(MonteCarloReport& rep, const std::vector<double>& deltas,
                  const std::vector<TailCounts>& counts, std::int64_t observations_per_trial,
                  const std::vector<double>& deviation_bounds, double size_delta, double size_bound) {
  const double trials = static_cast<double>(rep.trials);
  auto record = [&](std::string event, double delta, double freq, double bound) {
    TailRecord r;
    r.event = std::move(event);
    r.delta = delta;
    r.frequency = freq;
    r.bound = bound;
    r.limit = bound + 5.0 * std::sqrt(freq * (1.0 - freq) / trials);
    r.ok = freq <= r.limit;
    rep.tails_ok = rep.tails_ok && r.ok;
    rep.tails.push_back(r);
  };
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    std::int64_t hits = 0;
    for (const auto& c : counts) hits += c.deviation[d];
    const double freq = static_cast<double>(hits) / (trials * static_cast<double>(observations_per_trial));
    record("deviation", deltas[d], freq, deviation_bounds[d]);
  }
  std::int64_t size_hits = 0;
  for (const auto& c : counts) size_hits += c.size_event ? 1 : 0;
  record("size", size_delta, static_cast<double>(size_hits) / trials, size_bound);
}

void validate_options(const MonteCarloOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (opts.delta <= 0 || opts.delta >= 1) throw std::invalid_argument("delta must lie in (0, 1)");
  if (opts.epsilon <= 0 || opts.epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  for (double d : opts.tail_deltas) {
    if (!(d > 0)) throw std::invalid_argument("tail deltas must be positive");
  }
}

MonteCarloReport run_group(const GroupModel& m, std::uint64_t seed, const MonteCarloOptions& opts) {
  const GroupSpec& grp = m.group;
  const double p = group_inclusion_probability(grp, m.g);
  const std::int64_t order = grp.order();
  MonteCarloReport rep;
  rep.model = "group";
  rep.trials = opts.trials;
  rep.master_seed = seed;
  rep.required_g = ceil((1 - opts.delta) * Rational(m.g)).get_num().get_si();
  const Rational one_eps = 1 + opts.epsilon;
  rep.max_size = floor_sqrt_rational(one_eps * one_eps * Rational(m.g) * Rational(order));
  rep.expected_size = p * static_cast<double>(order);

  // Per-shift bound depends only on the order of the shift; cache by order.
  const auto& deltas = opts.tail_deltas;
  std::vector<double> deviation_bounds(deltas.size(), 0.0);
  if (order > 1) {
    std::map<std::int64_t, std::vector<double>> by_order;  // order -> bound per delta
    for (std::int64_t x = 1; x < order; ++x) {
      const std::int64_t h = grp.element_order(x);
      auto it = by_order.find(h);
      if (it == by_order.end()) {
        auto part = difference_partition(grp, x);
        std::vector<double> sizes(3, 0.0);
        for (int l : part) sizes[static_cast<std::size_t>(l)] += 1.0;
        std::vector<double> means;
        for (double s : sizes) {
          if (s > 0) means.push_back(static_cast<double>(m.g) * s / static_cast<double>(order));
        }
        std::vector<double> b;
        for (double d : deltas) b.push_back(union_bound(d, means));
        it = by_order.emplace(h, std::move(b)).first;
      }
      for (std::size_t d = 0; d < deltas.size(); ++d) deviation_bounds[d] += it->second[d];
    }
    for (auto& b : deviation_bounds) b /= static_cast<double>(order - 1);
  }

  rep.per_trial.resize(static_cast<std::size_t>(opts.trials));
  std::vector<TailCounts> counts(static_cast<std::size_t>(opts.trials));
  const double eps = opts.epsilon.get_d();
  const double mu_size = rep.expected_size;
  run_trials(opts.trials, opts.threads ? opts.threads : default_thread_count(), [&](std::int64_t t) {
    TrialRecord& tr = rep.per_trial[static_cast<std::size_t>(t)];
    tr.index = t;
    tr.seed = trial_seed(seed, static_cast<std::uint64_t>(t));
    GroupSubset a = random_group_subset(grp, m.g, tr.seed);
    tr.size = static_cast<std::int64_t>(a.size());
    TailCounts& tc = counts[static_cast<std::size_t>(t)];
    tc.deviation.assign(deltas.size(), 0);
    tc.size_event = std::abs(static_cast<double>(tr.size) - mu_size) >= eps * mu_size;
    if (a.empty()) {
      tr.achieved_g = 0;
      tr.success = false;
      for (auto& c : tc.deviation) c = order - 1;
      return;
    }
    RepProfile prof = group_rep_profile(a, RepMode::difference);
    tr.achieved_g = prof.min_count;
    tr.success = prof.min_count >= rep.required_g && tr.size <= rep.max_size;
    const double g = static_cast<double>(m.g);
    for (std::int64_t x = 1; x < order; ++x) {
      const double dev = std::abs(static_cast<double>(prof.counts[static_cast<std::size_t>(x)]) - g);
      for (std::size_t d = 0; d < deltas.size(); ++d) {
        if (dev >= deltas[d] * g) ++tc.deviation[d];
      }
    }
  });
  std::int64_t ok = 0;
  for (const auto& tr : rep.per_trial) ok += tr.success ? 1 : 0;
  rep.success_rate = static_cast<double>(ok) / static_cast<double>(opts.trials);
  finish_tails(rep, deltas, counts, std::max<std::int64_t>(order - 1, 1), deviation_bounds, eps,
               chernoff_probability(eps, mu_size));
  return rep;
}

MonteCarloReport run_sequence(const SequenceModel& m, std::uint64_t seed, const MonteCarloOptions& opts) {
  if (m.n < 1) throw std::invalid_argument("N must be positive");
  const ProbSeq& probs = m.probs;
  MonteCarloReport rep;
  rep.model = "sequence";
  rep.trials = opts.trials;
  rep.master_seed = seed;
  const Rational ratio = (1 - opts.epsilon) / (1 + opts.epsilon);
  const Rational r2 = ratio * ratio;
  rep.required_g = ceil_cbrt(r2 * r2 * r2 * Rational(m.n)).get_si();
  {
    // |A| <= (1 + eps) coef cbrt(rad) sum w  <=>  |A|^3 <= ((1+eps) coef sum w)^3 rad
    const CubeRootScaled& mass = probs.mass();
    Rational c = (1 + opts.epsilon) * mass.coef * probs.weight_sum();
    rep.max_size = floor_cbrt_rational(c * c * c * mass.radicand);
  }
  rep.expected_size = probs.expected_size();

  // Monitored shifts for the tail comparison, evenly spread over [1, N].
  std::vector<std::int64_t> shifts;
  const std::int64_t count = std::min<std::int64_t>(std::max<std::int64_t>(opts.monitored_shifts, 1), m.n);
  for (std::int64_t k = 1; k <= count; ++k) {
    std::int64_t s = (k * m.n + count - 1) / count;
    if (shifts.empty() || shifts.back() != s) shifts.push_back(s);
  }
  const auto& deltas = opts.tail_deltas;
  std::vector<double> shift_mean(shifts.size(), 0.0);
  std::vector<double> deviation_bounds(deltas.size(), 0.0);
  auto p = probs.probabilities();
  for (std::size_t s = 0; s < shifts.size(); ++s) {
    const std::int64_t sh = shifts[s];
    std::vector<double> parts(2, 0.0);
    for (std::size_t k = 0; k + static_cast<std::size_t>(sh) < p.size(); ++k) {
      const std::int64_t x = probs.offset() + static_cast<std::int64_t>(k);
      parts[static_cast<std::size_t>(residue_part(x, sh))] += p[k] * p[k + static_cast<std::size_t>(sh)];
    }
    shift_mean[s] = parts[0] + parts[1];
    std::vector<double> means;
    for (double mu : parts) {
      if (mu > 0) means.push_back(mu);
    }
    for (std::size_t d = 0; d < deltas.size(); ++d) {
      deviation_bounds[d] += means.empty() ? 0.0 : union_bound(deltas[d], means);
    }
  }
  for (auto& b : deviation_bounds) b /= static_cast<double>(shifts.size());

  rep.per_trial.resize(static_cast<std::size_t>(opts.trials));
  std::vector<TailCounts> counts(static_cast<std::size_t>(opts.trials));
  const double eps = opts.epsilon.get_d();
  const double mu_size = rep.expected_size;
  run_trials(opts.trials, opts.threads ? opts.threads : default_thread_count(), [&](std::int64_t t) {
    TrialRecord& tr = rep.per_trial[static_cast<std::size_t>(t)];
    tr.index = t;
    tr.seed = trial_seed(seed, static_cast<std::uint64_t>(t));
    IntSet a = sequence_random_set(probs, tr.seed);
    tr.size = static_cast<std::int64_t>(a.size());
    TailCounts& tc = counts[static_cast<std::size_t>(t)];
    tc.deviation.assign(deltas.size(), 0);
    tc.size_event = std::abs(static_cast<double>(tr.size) - mu_size) >= eps * mu_size;
    if (a.empty()) {
      tr.achieved_g = 0;
      tr.success = false;
      for (std::size_t s = 0; s < shifts.size(); ++s) {
        for (std::size_t d = 0; d < deltas.size(); ++d) {
          if (shift_mean[s] >= deltas[d] * shift_mean[s]) ++tc.deviation[d];
        }
      }
      return;
    }
    RepProfile prof = rep_diff_profile(a, 1, m.n);
    tr.achieved_g = prof.min_count;
    tr.success = prof.min_count >= rep.required_g && tr.size <= rep.max_size;
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      const double dev = std::abs(static_cast<double>(prof.at(shifts[s])) - shift_mean[s]);
      for (std::size_t d = 0; d < deltas.size(); ++d) {
        if (dev >= deltas[d] * shift_mean[s]) ++tc.deviation[d];
      }
    }
  });
  std::int64_t ok = 0;
  for (const auto& tr : rep.per_trial) ok += tr.success ? 1 : 0;
  rep.success_rate = static_cast<double>(ok) / static_cast<double>(opts.trials);
  finish_tails(rep, deltas, counts, static_cast<std::int64_t>(shifts.size()), deviation_bounds, eps,
               chernoff_probability(eps, mu_size));
  return rep;
}

}  // namespace

MonteCarloReport monte_carlo_validate(const RandomModel& model, const MonteCarloOptions& opts) {
  validate_options(opts);
  return std::visit(
      [&](const auto& m) -> MonteCarloReport {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GroupModel>) {
          return run_group(m, model.master_seed, opts);
        } else {
          return run_sequence(m, model.master_seed, opts);
        }
      },
      model.kind);
}

}  // namespace diffset
