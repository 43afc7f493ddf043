#include "diffset/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diffset/representation.hpp"

namespace diffset {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::eta: return "eta";
    case Quantity::gamma: return "gamma";
    case Quantity::beta: return "beta";
    case Quantity::alpha: return "alpha";
  }
  return "?";
}

Quantity parse_quantity(const std::string& name) {
  if (name == "eta") return Quantity::eta;
  if (name == "gamma") return Quantity::gamma;
  if (name == "beta") return Quantity::beta;
  if (name == "alpha") return Quantity::alpha;
  throw std::invalid_argument("unknown quantity '" + name + "'");
}

std::int64_t ExtremalResult::size_param() const { return group ? group->order() : n.value_or(0); }

namespace {

// Fixed-size search for a g-difference set for [N] inside [0, W], elements
// chosen in increasing order so the first hit is lexicographically smallest.
class EtaSearch {
 public:
  EtaSearch(std::int64_t g, std::int64_t n, std::int64_t w, const SearchConfig& cfg, std::int64_t& nodes)
      : g_(g), n_(n), w_(w), cfg_(cfg), nodes_(nodes), r_(static_cast<std::size_t>(n + 1), 0) {}

  std::optional<std::vector<std::int64_t>> run(std::int64_t k) {
    k_ = k;
    deficit_ = g_ * n_;
    std::fill(r_.begin(), r_.end(), 0);
    elems_.clear();
    const std::int64_t last_first = cfg_.fix_translation ? 0 : w_ - k + 1;
    for (std::int64_t first = 0; first <= last_first; ++first) {
      elems_.push_back(first);
      if (dfs()) return elems_;
      elems_.pop_back();
      if (aborted_) return std::nullopt;
    }
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }

 private:
  bool dfs() {
    const auto s = static_cast<std::int64_t>(elems_.size());
    const std::int64_t rem = k_ - s;
    if (rem == 0) return deficit_ == 0;
    if (++nodes_ > cfg_.node_budget) {
      aborted_ = true;
      return false;
    }
    const std::int64_t last = elems_.back();
    // Old elements that can still pair with a later element within distance N.
    const auto near = static_cast<std::int64_t>(
        elems_.end() - std::upper_bound(elems_.begin(), elems_.end(), last - n_));
    if (deficit_ > rem * near + rem * (rem - 1) / 2) return false;
    // A single shift gains at most one pair per new element from old ones,
    // plus at most rem - 1 among the new elements.
    for (std::int64_t m = 1; m <= n_; ++m) {
      if (g_ - r_[static_cast<std::size_t>(m)] > 2 * rem - 1) return false;
    }
    std::int64_t lo = last + 1;
    if (rem == 1) {
      if (r_[static_cast<std::size_t>(n_)] < g_) lo = std::max(lo, elems_.front() + n_);
      if (cfg_.reflection && s >= 2) lo = std::max(lo, last + (elems_[1] - elems_[0]));
    }
    const std::int64_t hi = w_ - (rem - 1);
    for (std::int64_t y = lo; y <= hi; ++y) {
      add(y);
      if (dfs()) return true;
      remove();
      if (aborted_) return false;
    }
    return false;
  }

  void add(std::int64_t y) {
    for (auto it = elems_.rbegin(); it != elems_.rend(); ++it) {
      const std::int64_t d = y - *it;
      if (d > n_) break;
      auto& c = r_[static_cast<std::size_t>(d)];
      if (c < g_) --deficit_;
      ++c;
    }
    elems_.push_back(y);
  }

  void remove() {
    const std::int64_t y = elems_.back();
    elems_.pop_back();
    for (auto it = elems_.rbegin(); it != elems_.rend(); ++it) {
      const std::int64_t d = y - *it;
      if (d > n_) break;
      auto& c = r_[static_cast<std::size_t>(d)];
      --c;
      if (c < g_) ++deficit_;
    }
  }

  std::int64_t g_, n_, w_;
  const SearchConfig& cfg_;
  std::int64_t& nodes_;
  std::int64_t k_ = 0;
  std::int64_t deficit_ = 0;
  bool aborted_ = false;
  std::vector<std::int64_t> r_;
  std::vector<std::int64_t> elems_;
};

struct EtaOutcome {
  std::optional<std::vector<std::int64_t>> witness;
  std::int64_t value = 0;
  bool aborted = false;
  std::int64_t reached = 0;  // smallest size not ruled out
};

EtaOutcome eta_search(std::int64_t g, std::int64_t n, std::int64_t w, std::int64_t start,
                      const SearchConfig& cfg, std::int64_t& nodes) {
  EtaOutcome out;
  EtaSearch search(g, n, w, cfg, nodes);
  for (std::int64_t k = start; k <= w + 1; ++k) {
    out.reached = k;
    auto hit = search.run(k);
    if (hit) {
      out.witness = std::move(hit);
      out.value = k;
      return out;
    }
    if (search.aborted()) {
      out.aborted = true;
      return out;
    }
  }
  out.reached = w + 2;
  return out;
}

// Greedy upper bound used when the budget runs out.
std::optional<std::vector<std::int64_t>> eta_greedy(std::int64_t g, std::int64_t n, std::int64_t w) {
  std::vector<std::int64_t> elems{0};
  std::vector<char> in(static_cast<std::size_t>(w + 1), 0);
  in[0] = 1;
  while (true) {
    IntSet cur(elems);
    RepProfile p = rep_diff_profile(cur, 1, n);
    if (p.min_count >= g) return elems;
    std::int64_t best = -1, best_gain = 0;
    for (std::int64_t y = 0; y <= w; ++y) {
      if (in[static_cast<std::size_t>(y)]) continue;
      std::int64_t gain = 0;
      for (auto a : elems) {
        std::int64_t d = std::llabs(y - a);
        if (d >= 1 && d <= n && p.counts[static_cast<std::size_t>(d - 1)] < g) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = y;
      }
    }
    if (best < 0) return std::nullopt;
    elems.push_back(best);
    in[static_cast<std::size_t>(best)] = 1;
  }
}

class GammaSearch {
 public:
  GammaSearch(std::int64_t g, const GroupSpec& grp, const SearchConfig& cfg, std::int64_t& nodes)
      : g_(g), grp_(grp), cfg_(cfg), nodes_(nodes), r_(static_cast<std::size_t>(grp.order()), 0) {}

  std::optional<std::vector<std::int64_t>> run(std::int64_t k) {
    k_ = k;
    std::fill(r_.begin(), r_.end(), 0);
    deficit_ = g_ * (grp_.order() - 1);
    elems_.clear();
    const std::int64_t last_first = cfg_.fix_translation ? 0 : grp_.order() - k;
    for (std::int64_t first = 0; first <= last_first; ++first) {
      add(first);
      if (dfs()) return elems_;
      remove();
      if (aborted_) return std::nullopt;
    }
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }

 private:
  bool dfs() {
    const auto s = static_cast<std::int64_t>(elems_.size());
    const std::int64_t rem = k_ - s;
    if (rem == 0) return deficit_ == 0;
    if (++nodes_ > cfg_.node_budget) {
      aborted_ = true;
      return false;
    }
    if (deficit_ > 2 * (rem * s + rem * (rem - 1) / 2)) return false;
    for (std::int64_t y = elems_.back() + 1; y <= grp_.order() - rem; ++y) {
      add(y);
      if (dfs()) return true;
      remove();
      if (aborted_) return false;
    }
    return false;
  }

  void bump(std::int64_t x, int delta) {
    if (x == 0) return;
    auto& c = r_[static_cast<std::size_t>(x)];
    if (delta > 0) {
      if (c < g_) --deficit_;
      ++c;
    } else {
      --c;
      if (c < g_) ++deficit_;
    }
  }

  void add(std::int64_t y) {
    for (auto a : elems_) {
      bump(grp_.sub(y, a), +1);
      bump(grp_.sub(a, y), +1);
    }
    elems_.push_back(y);
  }

  void remove() {
    const std::int64_t y = elems_.back();
    elems_.pop_back();
    for (auto a : elems_) {
      bump(grp_.sub(y, a), -1);
      bump(grp_.sub(a, y), -1);
    }
  }

  std::int64_t g_;
  const GroupSpec& grp_;
  const SearchConfig& cfg_;
  std::int64_t& nodes_;
  std::int64_t k_ = 0;
  std::int64_t deficit_ = 0;
  bool aborted_ = false;
  std::vector<std::int64_t> r_;
  std::vector<std::int64_t> elems_;
};

// Branch and bound for the largest set with bounded sum counts. Candidates are
// 0..limit-1 and `add_sum(y, a)` maps a pair to its slot in the count table.
template <typename SumIndex>
class SidonSearch {
 public:
  SidonSearch(std::int64_t g, std::int64_t candidates, std::int64_t slots, std::int64_t ceiling,
              const SearchConfig& cfg, SumIndex sum_index)
      : g_(g), candidates_(candidates), ceiling_(ceiling), cfg_(cfg), sum_(sum_index),
        q_(static_cast<std::size_t>(slots), 0) {}

  void run() {
    const std::int64_t last_first = cfg_.fix_translation ? 0 : candidates_ - 1;
    for (std::int64_t first = 0; first <= last_first && !done(); ++first) {
      if (!fits(first)) continue;
      push(first);
      dfs();
      pop();
    }
  }

  std::vector<std::int64_t> best;
  std::int64_t nodes = 0;
  bool aborted = false;

 private:
  bool done() const { return aborted || static_cast<std::int64_t>(best.size()) >= ceiling_; }

  void dfs() {
    if (static_cast<std::int64_t>(elems_.size()) > static_cast<std::int64_t>(best.size())) best = elems_;
    if (done()) return;
    if (++nodes > cfg_.node_budget) {
      aborted = true;
      return;
    }
    const std::int64_t last = elems_.back();
    for (std::int64_t y = last + 1; y < candidates_; ++y) {
      if (static_cast<std::int64_t>(elems_.size()) + (candidates_ - y) <= static_cast<std::int64_t>(best.size())) {
        return;
      }
      if (!fits(y)) continue;
      push(y);
      dfs();
      pop();
      if (done()) return;
    }
  }

  bool fits(std::int64_t y) {
    if (q_[static_cast<std::size_t>(sum_(y, y))] + 1 > g_) return false;
    // Pairs y + a may coincide for different a only in groups; count them.
    touched_.clear();
    for (auto a : elems_) {
      auto s = static_cast<std::size_t>(sum_(y, a));
      q_[s] += 2;
      touched_.push_back(s);
    }
    auto s2 = static_cast<std::size_t>(sum_(y, y));
    q_[s2] += 1;
    bool ok = true;
    for (auto s : touched_) ok = ok && q_[s] <= g_;
    ok = ok && q_[s2] <= g_;
    for (auto s : touched_) q_[s] -= 2;
    q_[s2] -= 1;
    return ok;
  }

  void push(std::int64_t y) {
    for (auto a : elems_) q_[static_cast<std::size_t>(sum_(y, a))] += 2;
    q_[static_cast<std::size_t>(sum_(y, y))] += 1;
    elems_.push_back(y);
  }

  void pop() {
    const std::int64_t y = elems_.back();
    elems_.pop_back();
    for (auto a : elems_) q_[static_cast<std::size_t>(sum_(y, a))] -= 2;
    q_[static_cast<std::size_t>(sum_(y, y))] -= 1;
  }

  std::int64_t g_, candidates_, ceiling_;
  const SearchConfig& cfg_;
  SumIndex sum_;
  std::vector<std::int64_t> q_;
  std::vector<std::int64_t> elems_;
  std::vector<std::size_t> touched_;
};

}  // namespace

ExtremalResult eta_exact(std::int64_t g, std::int64_t n, const SearchConfig& cfg) {
  if (g < 1 || n < 1) throw std::invalid_argument("g and N must be positive");
  std::int64_t w = cfg.window == 0 ? 2 * n : cfg.window;
  if (w < n) throw std::invalid_argument("window must be at least N");
  ExtremalResult res;
  res.quantity = Quantity::eta;
  res.g = g;
  res.n = n;
  const std::int64_t start = *trivial_bounds(g, n).eta_lb;
  EtaOutcome out = eta_search(g, n, w, start, cfg, res.nodes);
  // The default window grows when g is large against N and nothing fits.
  while (cfg.window == 0 && !out.aborted && !out.witness) {
    w *= 2;
    out = eta_search(g, n, w, start, cfg, res.nodes);
  }
  res.window = w;
  if (out.aborted) {
    auto greedy = eta_greedy(g, n, w);
    if (!greedy) throw std::runtime_error("node budget exhausted and no g-difference set found in window");
    res.value = static_cast<std::int64_t>(greedy->size());
    res.witness = IntSet(std::move(*greedy));
    res.proven_bound = out.reached;
    res.exhaustive = false;
    return res;
  }
  if (!out.witness) throw std::runtime_error("no g-difference set for [N] within window");
  res.value = out.value;
  res.witness = IntSet(std::move(*out.witness));
  res.proven_bound = out.value;
  res.exhaustive = false;
  if (cfg.sensitivity_check) {
    // Supersets keep the property, so ruling out size value-1 on [0, 2W] suffices.
    if (out.value - 1 < start) {
      res.exhaustive = true;
    } else {
      EtaSearch wide(g, n, 2 * w, cfg, res.nodes);
      auto smaller = wide.run(out.value - 1);
      res.exhaustive = !smaller && !wide.aborted();
    }
  }
  return res;
}

ExtremalResult gamma_exact(std::int64_t g, const GroupSpec& group, const SearchConfig& cfg) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  if (g > group.order()) throw std::invalid_argument("g exceeds |G|; gamma_g(G) does not exist");
  ExtremalResult res;
  res.quantity = Quantity::gamma;
  res.g = g;
  res.group = group;
  const TrivialBounds tb = trivial_bounds(g, group);
  const std::int64_t start = std::max({g, *tb.gamma_lb, *tb.gamma_strict_lb});
  GammaSearch search(g, group, cfg, res.nodes);
  for (std::int64_t k = start; k <= group.order(); ++k) {
    res.proven_bound = k;
    auto hit = search.run(k);
    if (hit) {
      res.value = k;
      res.witness = GroupSubset::from_indices(group, std::move(*hit));
      res.exhaustive = true;
      return res;
    }
    if (search.aborted()) break;
  }
  // Budget exhausted: the whole group is always a |G|-difference set.
  res.value = group.order();
  res.witness = GroupSubset::whole(group);
  res.exhaustive = false;
  return res;
}

ExtremalResult beta_exact(std::int64_t g, std::int64_t n, const SearchConfig& cfg) {
  if (g < 1 || n < 1) throw std::invalid_argument("g and N must be positive");
  ExtremalResult res;
  res.quantity = Quantity::beta;
  res.g = g;
  res.n = n;
  const std::int64_t ceiling = std::min(n, *trivial_bounds(g, n).beta_ub);
  // Candidate y stands for the integer y + 1; sums y + a + 2 live in [2, 2N].
  auto index = [](std::int64_t y, std::int64_t a) { return y + a; };
  SidonSearch<decltype(index)> search(g, n, 2 * n - 1, ceiling, cfg, index);
  search.run();
  std::vector<std::int64_t> w;
  for (auto y : search.best) w.push_back(y + 1);
  res.value = static_cast<std::int64_t>(w.size());
  res.witness = IntSet(std::move(w));
  res.nodes = search.nodes;
  res.exhaustive = !search.aborted;
  res.proven_bound = res.value;
  return res;
}

ExtremalResult alpha_exact(std::int64_t g, const GroupSpec& group, const SearchConfig& cfg) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  ExtremalResult res;
  res.quantity = Quantity::alpha;
  res.g = g;
  res.group = group;
  const std::int64_t ceiling = std::min(group.order(), *trivial_bounds(g, group).alpha_ub);
  auto index = [&group](std::int64_t y, std::int64_t a) { return group.add(y, a); };
  SidonSearch<decltype(index)> search(g, group.order(), group.order(), ceiling, cfg, index);
  search.run();
  res.value = static_cast<std::int64_t>(search.best.size());
  res.witness = GroupSubset::from_indices(group, search.best);
  res.nodes = search.nodes;
  res.exhaustive = !search.aborted;
  res.proven_bound = res.value;
  return res;
}

std::vector<RatioRow> ratio_report(const std::vector<ExtremalResult>& results, const BoundsLedger& ledger) {
  std::vector<RatioRow> rows;
  rows.reserve(results.size());
  for (const auto& r : results) {
    RatioRow row;
    row.quantity = r.quantity;
    row.g = r.g;
    row.param = r.size_param();
    row.value = r.value;
    const bool over_z = r.quantity == Quantity::eta || r.quantity == Quantity::beta;
    const double denom = std::sqrt(static_cast<double>(r.g) * static_cast<double>(row.param));
    row.ratio = static_cast<double>(r.value) / denom;

    std::vector<std::string> flags;
    if (r.quantity == Quantity::eta && r.exhaustive) {
      // value / sqrt(gN) < tau_lo  <=>  value^2 < tau_lo^2 g N
      const Rational lhs = Rational(r.value) * Rational(r.value);
      const Rational rhs = ledger.tau.lower * ledger.tau.lower * Rational(r.g) * Rational(row.param);
      if (lhs < rhs) flags.push_back("FATAL:below-tau");
    }
    const TrivialBounds tb = over_z ? trivial_bounds(r.g, row.param) : trivial_bounds(r.g, *r.group);
    bool bound_ok = true;
    switch (r.quantity) {
      case Quantity::eta: bound_ok = r.value >= *tb.eta_lb; break;
      case Quantity::beta: bound_ok = r.value <= *tb.beta_ub; break;
      case Quantity::gamma: bound_ok = r.value >= *tb.gamma_lb && r.value >= *tb.gamma_strict_lb; break;
      case Quantity::alpha: bound_ok = r.value <= *tb.alpha_ub; break;
    }
    if (!bound_ok) flags.push_back("trivial-bound");

    // eta, gamma, beta, alpha are all nondecreasing in g and (over Z) in N.
    for (const auto& o : results) {
      if (o.quantity != r.quantity || &o == &r) continue;
      bool dominated;
      if (over_z) {
        dominated = o.g <= r.g && *o.n <= *r.n;
      } else {
        dominated = o.g <= r.g && *o.group == *r.group;
      }
      if (dominated && o.value > r.value) {
        flags.push_back("non-monotone");
        break;
      }
    }
    if (!flags.empty()) {
      row.flag.clear();
      for (std::size_t i = 0; i < flags.size(); ++i) row.flag += (i ? "," : "") + flags[i];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace diffset
