// Command-line front end. Exit codes: 0 pass, 1 certificate violation, 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "diffset/averages.hpp"
#include "diffset/bounds.hpp"
#include "diffset/composition.hpp"
#include "diffset/json_io.hpp"
#include "diffset/monte_carlo.hpp"
#include "diffset/parabola.hpp"
#include "diffset/random_sets.hpp"
#include "diffset/representation.hpp"
#include "diffset/solver.hpp"
#include "diffset/step_function.hpp"
#include "diffset/torus.hpp"

using namespace diffset;
using io::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation : std::runtime_error {
  Json body;
  Violation(const std::string& what, Json b) : std::runtime_error(what), body(std::move(b)) {}
};

struct Common {
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
  std::string format = "json";
  std::string manifest;
  bool oracle = false;
  std::vector<std::string> inputs;
};

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_file(const std::string& path, Common& c) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  c.inputs.push_back(path);
  return ss.str();
}

Json read_json(const std::string& path, Common& c) {
  try {
    return Json::parse(read_file(path, c));
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

GroupSpec parse_group(const std::string& text) {
  std::vector<std::int64_t> f;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      f.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw InputError("malformed group '" + text + "'; expected invariant factors like 2,6");
    }
  }
  return GroupSpec(f);
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dash = part.find('-', 1);
    try {
      if (dash != std::string::npos) {
        for (std::int64_t x = std::stoll(part.substr(0, dash)); x <= std::stoll(part.substr(dash + 1)); ++x) v.push_back(x);
      } else {
        v.push_back(std::stoll(part));
      }
    } catch (const std::exception&) {
      throw InputError("malformed list '" + text + "'");
    }
  }
  return v;
}

// One line per scalar field; arrays and objects are summarized.
std::string render_text(const Json& j, const std::string& indent = "") {
  std::string out;
  if (j.is_array()) {
    for (const auto& row : j) out += render_text(row, indent) + (row.is_object() ? "\n" : "");
    return out;
  }
  if (!j.is_object()) return indent + j.dump() + "\n";
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out += indent + k + ":\n" + render_text(v, indent + "  ");
    } else if (v.is_array() && v.size() > 12) {
      out += indent + k + ": [" + std::to_string(v.size()) + " items]\n";
    } else {
      out += indent + k + ": " + v.dump() + "\n";
    }
  }
  return out;
}

void emit(const std::string& text, const Common& c) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw InputError("cannot write '" + c.out + "'");
}

void emit(const Json& j, const Common& c) {
  if (c.json || !c.out.empty()) {
    emit(j.dump(2) + "\n", c);
  } else {
    emit(render_text(j), c);
  }
}

IntSet need_int_set(const Json& j) {
  if (!j.is_array()) throw InputError("expected an integer set (JSON array)");
  return io::int_set_from_json(j);
}

// Brute-force r_A over all of G, independent of the profile code.
std::int64_t brute_min_nonzero(const GroupSubset& a) {
  const auto& g = a.group();
  std::vector<std::int64_t> r(static_cast<std::size_t>(g.order()), 0);
  for (auto x : a.indices())
    for (auto y : a.indices()) ++r[static_cast<std::size_t>(g.sub(x, y))];
  std::int64_t best = r.size() > 1 ? r[1] : 0;
  for (std::size_t i = 1; i < r.size(); ++i) best = std::min(best, r[i]);
  return best;
}

void oracle_fail(const std::string& what) { throw std::logic_error("oracle mismatch: " + what); }

// ---- subcommands -------------------------------------------------------

int cmd_verify(Common& c, const std::string& set_path, const std::string& mode, std::int64_t g, std::int64_t n) {
  Json in = read_json(set_path, c);
  const CertificateMode m = mode == "sidon" ? CertificateMode::sidon : CertificateMode::difference;
  Verdict v;
  if (in.is_array()) {
    if (n < 1) throw InputError("--N is required for an integer set");
    IntSet a = io::int_set_from_json(in);
    v = verify_certificate(a, g, n, m);
    if (c.oracle && a.size() <= 3000) {
      std::int64_t extreme = m == CertificateMode::difference ? INT64_MAX : 0;
      const std::int64_t lo = m == CertificateMode::difference ? 1 : 2;
      const std::int64_t hi = m == CertificateMode::difference ? n : 2 * n;
      std::vector<std::int64_t> cnt(static_cast<std::size_t>(hi - lo + 1), 0);
      for (auto x : a.elements())
        for (auto y : a.elements()) {
          std::int64_t t = m == CertificateMode::difference ? x - y : x + y;
          if (t >= lo && t <= hi) ++cnt[static_cast<std::size_t>(t - lo)];
        }
      for (auto k : cnt) extreme = m == CertificateMode::difference ? std::min(extreme, k) : std::max(extreme, k);
      if (extreme != v.achieved_g) oracle_fail("achieved_g");
    }
  } else {
    GroupSubset a = io::group_subset_from_json(in);
    v = verify_certificate(a, g, m);
    if (c.oracle && m == CertificateMode::difference && a.size() <= 3000 && a.group().order() > 1 &&
        brute_min_nonzero(a) != v.achieved_g) {
      oracle_fail("achieved_g");
    }
  }
  emit(io::to_json(v), c);
  return v.passed ? 0 : 1;
}

int cmd_profile(Common& c, const std::string& set_path, const std::string& mode, std::optional<std::int64_t> lo,
                std::optional<std::int64_t> hi) {
  Json in = read_json(set_path, c);
  const RepMode m = mode == "sum" ? RepMode::sum : RepMode::difference;
  if (in.is_array()) {
    IntSet a = io::int_set_from_json(in);
    if (a.empty()) throw InputError("empty set");
    const std::int64_t span = a.max() - a.min();
    if (m == RepMode::difference) {
      emit(io::to_json(rep_diff_profile(a, lo.value_or(-span), hi.value_or(span))), c);
    } else {
      emit(io::to_json(rep_sum_profile(a, lo.value_or(2 * a.min()), hi.value_or(2 * a.max()))), c);
    }
  } else {
    emit(io::to_json(group_rep_profile(io::group_subset_from_json(in), m)), c);
  }
  return 0;
}

int cmd_parabola(Common& c, std::int64_t p, std::int64_t k, std::int64_t cap, std::int64_t sample) {
  UnionOptions opts{cap, sample, c.seed};
  ParabolaUnion u = best_shift_union(p, k, opts);
  if (c.oracle && u.enumeration == Enumeration::exhaustive && p <= 60 && brute_min_nonzero(u.set) != u.verified_g) {
    oracle_fail("verified_g");
  }
  emit(io::to_json(u), c);
  return u.instance_bound_holds ? 0 : 1;
}

int cmd_lift(Common& c, const std::string& set_path, std::int64_t s, std::optional<std::int64_t> g) {
  GroupSubset a = io::group_subset_from_json(read_json(set_path, c));
  const std::int64_t base_g = g.value_or(brute_min_nonzero(a));
  GroupSubset lifted = lift_to_cyclic(a, s);
  Json j = io::to_json(lifted);
  j["base_g"] = base_g;
  j["inherited_g"] = base_g * (s - 1);
  const std::int64_t verified = brute_min_nonzero(lifted);
  j["verified_g"] = verified;
  emit(j, c);
  return verified >= base_g * (s - 1) ? 0 : 1;
}

int cmd_pipeline(Common& c, std::int64_t k, std::int64_t s, std::int64_t p) {
  PipelineOptions opts;
  opts.base.seed = c.seed;
  PipelineReport r = cyclic_pipeline(k, s, p, opts);
  if (c.oracle && r.verified_g && r.lifted.size() <= 3000 && brute_min_nonzero(r.lifted) != *r.verified_g) {
    oracle_fail("verified_g");
  }
  emit(io::to_json(r), c);
  return !r.verified_g || *r.verified_g >= r.inherited_g ? 0 : 1;
}

int cmd_blowup(Common& c, const std::string& a_path, std::int64_t n, const std::string& c_path, std::optional<std::int64_t> q,
               std::optional<std::int64_t> g1, std::optional<std::int64_t> g2) {
  IntSet a = need_int_set(read_json(a_path, c));
  Json cj = read_json(c_path, c);
  GroupSubset cs = GroupSubset(GroupSpec::cyclic(1));
  if (cj.is_array()) {
    if (!q) throw InputError("--q is required when C is a plain residue array");
    std::vector<std::int64_t> idx;
    for (const auto& x : cj) idx.push_back(((x.get<std::int64_t>() % *q) + *q) % *q);
    cs = GroupSubset::from_indices(GroupSpec::cyclic(*q), idx);
  } else {
    cs = io::group_subset_from_json(cj);
    if (q && cs.group().order() != *q) throw InputError("--q disagrees with the group of C");
  }
  const std::int64_t ga = g1.value_or(rep_diff_profile(a, 1, n).min_count);
  const std::int64_t gc = g2.value_or(cs.group().order() == 1 ? static_cast<std::int64_t>(cs.size()) : brute_min_nonzero(cs));
  if (ga < 1 || gc < 1) throw InputError("inputs are not difference sets for any g >= 1");
  IntSet b = blow_up(a, ga, n, cs, gc);
  const std::int64_t qq = cs.group().order();
  Verdict v = verify_certificate(b, ga * gc, qq * n, CertificateMode::difference);
  Json j{{"set", io::to_json(b)}, {"size", b.size()}, {"g", ga * gc}, {"N", qq * n}, {"verdict", io::to_json(v)}};
  emit(j, c);
  return v.passed ? 0 : 1;
}

MonteCarloOptions mc_options(std::int64_t trials, const std::string& delta, const std::string& eps) {
  MonteCarloOptions o;
  o.trials = trials;
  o.delta = parse_rational(delta);
  o.epsilon = parse_rational(eps);
  return o;
}

int cmd_random_group(Common& c, const std::string& group, std::int64_t g, std::int64_t trials, const std::string& delta,
                     const std::string& eps) {
  GroupSpec spec = parse_group(group);
  if (trials <= 0) {
    emit(io::to_json(random_group_subset(spec, g, c.seed)), c);
    return 0;
  }
  auto rep = monte_carlo_validate(RandomModel{GroupModel{spec, g}, c.seed}, mc_options(trials, delta, eps));
  emit(io::to_json(rep), c);
  return rep.tails_ok ? 0 : 1;
}

ProbSeq probs_from(Common& c, const std::string& f_path, std::int64_t n, const std::string& tau, bool stretch) {
  StepFunction f = io::step_function_from_json(read_json(f_path, c));
  AveragesOptions ao;
  ao.stretch = stretch;
  return averages_to_probs(local_averages(f, n, parse_rational(tau), ao).seq);
}

int cmd_random_sequence(Common& c, const std::string& f_path, std::int64_t n, const std::string& tau, bool stretch,
                        std::int64_t trials, const std::string& eps) {
  ProbSeq p = probs_from(c, f_path, n, tau, stretch);
  if (trials <= 0) {
    emit(Json{{"set", io::to_json(sequence_random_set(p, c.seed))}}, c);
    return 0;
  }
  auto rep = monte_carlo_validate(RandomModel{SequenceModel{p, n}, c.seed}, mc_options(trials, "3/10", eps));
  emit(io::to_json(rep), c);
  return rep.tails_ok ? 0 : 1;
}

int cmd_set_to_fn(Common& c, const std::string& set_path, std::int64_t g, std::int64_t n) {
  IntSet a = need_int_set(read_json(set_path, c));
  StepFunction f = set_to_step(a, g, n);
  Json j = io::to_json(f);
  auto l1 = f.l1_norm();
  j["l1"] = Json{{"coef", to_string(l1.coef)}, {"radicand", to_string(l1.radicand)}, {"approx", io::round6(l1.to_double())}};
  emit(j, c);
  return 0;
}

int cmd_fn_check(Common& c, const std::string& f_path, const std::string& family) {
  StepFunction f = io::step_function_from_json(read_json(f_path, c));
  FamilyVerdict v = family == "autoconvolution" ? check_autoconvolution_family(f) : check_autocorrelation_family(f);
  Json j = io::to_json(v);
  j["family"] = family;
  emit(j, c);
  return v.member ? 0 : 1;
}

int cmd_averages(Common& c, const std::string& f_path, std::int64_t n, const std::string& tau, bool stretch) {
  StepFunction f = io::step_function_from_json(read_json(f_path, c));
  AveragesOptions ao;
  ao.stretch = stretch;
  AveragesResult r = local_averages(f, n, parse_rational(tau), ao);
  emit(io::to_json(r), c);
  const auto& k = r.conditions;
  return k.sum_ok && k.max_ok && k.pair_ok.value_or(true) ? 0 : 1;
}

int cmd_probs(Common& c, const std::string& f_path, std::int64_t n, const std::string& tau, bool stretch, bool check_pairs) {
  StepFunction f = io::step_function_from_json(read_json(f_path, c));
  AveragesOptions ao;
  ao.stretch = stretch;
  AveragesResult r = local_averages(f, n, parse_rational(tau), ao);
  ProbSeq p = averages_to_probs(r.seq);
  Json j = io::to_json(p);
  int code = 0;
  if (check_pairs) {
    auto pc = check_pair_correlation(p, n, r.seq.realized_epsilon());
    j["pair_correlation"] = Json{{"holds", pc.holds}, {"worst_shift", pc.worst_shift}, {"worst_ratio", io::round6(pc.worst_ratio)}};
    code = pc.holds ? 0 : 1;
  }
  emit(j, c);
  return code;
}

int cmd_torus(Common& c, const std::string& set_path, std::int64_t g) {
  GroupSubset a = io::group_subset_from_json(read_json(set_path, c));
  TorusStepFunction h = group_set_to_torus(a, g);
  Json j = io::to_json(h);
  auto [mn, at] = h.autocorrelation_min();
  j["min_autocorrelation"] = to_string(mn);
  j["argmin"] = h.group.element_at(at);
  auto l1 = h.l1_norm();
  j["l1"] = Json{{"coef", to_string(l1.coef)}, {"radicand", to_string(l1.radicand)}, {"approx", io::round6(l1.to_double())}};
  emit(j, c);
  return 0;
}

SearchConfig search_config(std::int64_t window, std::int64_t budget) {
  SearchConfig cfg;
  cfg.window = window;
  cfg.node_budget = budget;
  return cfg;
}

ExtremalResult run_solver(Quantity q, std::int64_t g, std::int64_t n, const std::string& group, const SearchConfig& cfg) {
  switch (q) {
    case Quantity::eta: return eta_exact(g, n, cfg);
    case Quantity::beta: return beta_exact(g, n, cfg);
    case Quantity::gamma: return gamma_exact(g, parse_group(group), cfg);
    case Quantity::alpha: return alpha_exact(g, parse_group(group), cfg);
  }
  throw InputError("unknown quantity");
}

int cmd_solve(Common& c, Quantity q, std::int64_t g, std::int64_t n, const std::string& group, std::int64_t window,
              std::int64_t budget) {
  const bool over_z = q == Quantity::eta || q == Quantity::beta;
  if (over_z && n < 1) throw InputError("--N is required");
  if (!over_z && group.empty()) throw InputError("--G is required");
  ExtremalResult r = run_solver(q, g, n, group, search_config(window, budget));
  emit(io::to_json(r), c);
  return 0;
}

int cmd_report(Common& c, const std::string& quantities, const std::string& gs, const std::string& ns, std::int64_t budget) {
  std::vector<ExtremalResult> results;
  std::stringstream ss(quantities);
  std::string name;
  const auto g_list = parse_list(gs), n_list = parse_list(ns);
  while (std::getline(ss, name, ',')) {
    Quantity q = parse_quantity(name);
    const bool over_z = q == Quantity::eta || q == Quantity::beta;
    for (auto g : g_list)
      for (auto n : n_list) {
        if (!over_z && (n < 1 || (q == Quantity::gamma && g > n))) continue;
        results.push_back(run_solver(q, g, n, std::to_string(n), search_config(0, budget)));
      }
  }
  auto rows = ratio_report(results, BoundsLedger::standard());
  if (c.format == "csv") {
    emit(io::to_csv(rows), c);
  } else {
    emit(io::to_json(rows).dump(2) + "\n", c);
  }
  for (const auto& r : rows)
    if (r.flag != "ok") return 1;
  return 0;
}

int cmd_bounds(Common& c, std::int64_t g, std::int64_t n, const std::string& group) {
  Json j{{"ledger", io::to_json(BoundsLedger::standard())}};
  if (n > 0) j["interval"] = io::to_json(trivial_bounds(g, n));
  if (!group.empty()) j["group"] = io::to_json(trivial_bounds(g, parse_group(group)));
  emit(j, c);
  return 0;
}

void write_manifest(const Common& c, int argc, char** argv, double seconds, int code) {
  Json inputs = Json::object();
  for (const auto& p : c.inputs) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    inputs[p] = fnv1a(ss.str());
  }
  std::vector<std::string> args(argv, argv + argc);
  Json m{{"command_line", args},
         {"seed", c.seed},
         {"versions", {{"diffset", kVersion}, {"gmp", gmp_version}, {"json", "nlohmann " + std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR)}}},
         {"input_digests", inputs},
         {"wall_clock_seconds", io::round6(seconds)},
         {"output_paths", c.out.empty() ? Json::array() : Json::array({c.out})},
         {"exit_code", code}};
  std::ofstream f(c.manifest, std::ios::binary);
  if (!f || !(f << m.dump(2) << "\n")) throw InputError("cannot write manifest '" + c.manifest + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for generalized difference sets and g-Sidon sets"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--seed", c.seed, "Master seed for randomized paths");
  app.add_flag("--json", c.json, "Emit JSON instead of a text summary");
  app.add_option("--out", c.out, "Write output to this path");
  app.add_option("--format", c.format, "Table format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--manifest", c.manifest, "Write a run manifest to this path");
  app.add_flag("--oracle", c.oracle, "Re-check results by brute force when small");

  std::function<int()> action;

  // verify
  std::string set_path, mode = "difference";
  std::int64_t g = 1, n = 0;
  auto* verify = app.add_subcommand("verify", "Check a difference or Sidon certificate");
  verify->add_option("--set", set_path, "Set JSON (integer array or group subset)")->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"difference", "sidon"}));
  verify->add_option("--g", g)->required();
  verify->add_option("--N", n, "Interval [N] for integer sets");
  verify->callback([&] { action = [&] { return cmd_verify(c, set_path, mode, g, n); }; });

  std::optional<std::int64_t> lo, hi;
  std::string pmode = "difference";
  auto* profile = app.add_subcommand("profile", "Representation counts of a set");
  profile->add_option("--set", set_path)->required();
  profile->add_option("--mode", pmode)->check(CLI::IsMember({"difference", "sum"}));
  profile->add_option("--lo", lo);
  profile->add_option("--hi", hi);
  profile->callback([&] { action = [&] { return cmd_profile(c, set_path, pmode, lo, hi); }; });

  // construct
  auto* construct = app.add_subcommand("construct", "Explicit constructions");
  construct->require_subcommand(1);
  std::int64_t p = 0, k = 0, s = 0, cap = 1'000'000, sample = 4096;
  std::optional<std::int64_t> gopt, q, g1, g2;
  std::string a_path, c_path;
  auto* parabola = construct->add_subcommand("parabola", "Best-shift union of parabolas in (Z/p)^2");
  parabola->add_option("--p", p)->required();
  parabola->add_option("--k", k)->required();
  parabola->add_option("--cap", cap, "Largest p^2 enumerated exhaustively");
  parabola->add_option("--sample", sample, "Targets sampled above the cap");
  parabola->callback([&] { action = [&] { return cmd_parabola(c, p, k, cap, sample); }; });
  auto* lift = construct->add_subcommand("lift", "Lift a subset of (Z/p)^2 to Z/(p^2 s)");
  lift->add_option("--set", set_path)->required();
  lift->add_option("--s", s)->required();
  lift->add_option("--g", gopt, "g of the input (default: measured)");
  lift->callback([&] { action = [&] { return cmd_lift(c, set_path, s, gopt); }; });
  auto* pipeline = construct->add_subcommand("pipeline", "Parabola union followed by the cyclic lift");
  pipeline->add_option("--k", k)->required();
  pipeline->add_option("--s", s)->required();
  pipeline->add_option("--p", p)->required();
  pipeline->callback([&] { action = [&] { return cmd_pipeline(c, k, s, p); }; });
  auto* blowup = construct->add_subcommand("blowup", "Compose an interval set with a cyclic set");
  blowup->add_option("--A", a_path)->required();
  blowup->add_option("--N", n)->required();
  blowup->add_option("--C", c_path)->required();
  blowup->add_option("--q", q, "Modulus of C when C is a residue array");
  blowup->add_option("--g1", g1);
  blowup->add_option("--g2", g2);
  blowup->callback([&] { action = [&] { return cmd_blowup(c, a_path, n, c_path, q, g1, g2); }; });

  // random
  auto* random = app.add_subcommand("random", "Random constructions and Monte Carlo validation");
  random->require_subcommand(1);
  std::string group, delta = "3/10", eps = "1/10", f_path, tau = "8/5";
  std::int64_t trials = 0;
  bool stretch = false, check_pairs = false;
  auto* rgroup = random->add_subcommand("group", "Uniform random subset of G");
  rgroup->add_option("--G", group, "Invariant factors, e.g. 20000 or 2,6")->required();
  rgroup->add_option("--g", g)->required();
  rgroup->add_option("--trials", trials, "Run a Monte Carlo validation with this many trials");
  rgroup->add_option("--delta", delta);
  rgroup->add_option("--epsilon", eps);
  rgroup->callback([&] { action = [&] { return cmd_random_group(c, group, g, trials, delta, eps); }; });
  auto* rseq = random->add_subcommand("sequence", "Random set from local-average probabilities");
  rseq->add_option("--f", f_path, "Step function JSON")->required();
  rseq->add_option("--N", n)->required();
  rseq->add_option("--tau", tau);
  rseq->add_flag("--stretch", stretch);
  rseq->add_option("--trials", trials);
  rseq->add_option("--epsilon", eps);
  rseq->callback([&] { action = [&] { return cmd_random_sequence(c, f_path, n, tau, stretch, trials, eps); }; });

  // bridge
  auto* bridge = app.add_subcommand("bridge", "Discrete to continuous translations");
  bridge->require_subcommand(1);
  std::string family = "autocorrelation";
  auto* s2f = bridge->add_subcommand("set-to-fn", "Step function of an integer set");
  s2f->add_option("--set", set_path)->required();
  s2f->add_option("--g", g)->required();
  s2f->add_option("--N", n)->required();
  s2f->callback([&] { action = [&] { return cmd_set_to_fn(c, set_path, g, n); }; });
  auto* fcheck = bridge->add_subcommand("fn-check", "Family membership of a step function");
  fcheck->add_option("--f", f_path)->required();
  fcheck->add_option("--family", family)->check(CLI::IsMember({"autocorrelation", "autoconvolution"}));
  fcheck->callback([&] { action = [&] { return cmd_fn_check(c, f_path, family); }; });
  auto* avg = bridge->add_subcommand("averages", "Local averages and their conditions");
  avg->add_option("--f", f_path)->required();
  avg->add_option("--N", n)->required();
  avg->add_option("--tau", tau);
  avg->add_flag("--stretch", stretch);
  avg->callback([&] { action = [&] { return cmd_averages(c, f_path, n, tau, stretch); }; });
  auto* probs = bridge->add_subcommand("probs", "Inclusion probabilities from local averages");
  probs->add_option("--f", f_path)->required();
  probs->add_option("--N", n)->required();
  probs->add_option("--tau", tau);
  probs->add_flag("--stretch", stretch);
  probs->add_flag("--check-pairs", check_pairs, "Exact pair-correlation check over m in [N]");
  probs->callback([&] { action = [&] { return cmd_probs(c, f_path, n, tau, stretch, check_pairs); }; });
  auto* torus = bridge->add_subcommand("torus", "Torus step function of a group subset");
  torus->add_option("--set", set_path)->required();
  torus->add_option("--g", g)->required();
  torus->callback([&] { action = [&] { return cmd_torus(c, set_path, g); }; });

  // solve
  auto* solve = app.add_subcommand("solve", "Exact extremal values");
  solve->require_subcommand(1);
  std::int64_t window = 0, budget = 200'000'000;
  for (const char* name : {"eta", "gamma", "beta", "alpha"}) {
    auto* sub = solve->add_subcommand(name, std::string("Compute ") + name);
    sub->add_option("--g", g)->required();
    const bool over_z = std::string(name) == "eta" || std::string(name) == "beta";
    if (over_z) {
      sub->add_option("--N", n)->required();
    } else {
      sub->add_option("--G", group)->required();
    }
    if (std::string(name) == "eta") sub->add_option("--window", window, "Search window [0, W]; 0 means 2N");
    sub->add_option("--budget", budget, "Node budget");
    Quantity qty = parse_quantity(name);
    sub->callback([&, qty] { action = [&, qty] { return cmd_solve(c, qty, g, n, group, window, budget); }; });
  }

  // report
  auto* report = app.add_subcommand("report", "Ratio tables");
  report->require_subcommand(1);
  std::string quantities = "eta", gs = "1", ns = "1-10";
  auto* ratios = report->add_subcommand("ratios", "Value / sqrt(g * size) per row with flags");
  ratios->add_option("--quantities", quantities, "Comma list of eta,gamma,beta,alpha");
  ratios->add_option("--g", gs, "g values, e.g. 1,2 or 1-3");
  ratios->add_option("--N", ns, "N (or cyclic order) values, e.g. 1-12");
  ratios->add_option("--budget", budget);
  ratios->callback([&] { action = [&] { return cmd_report(c, quantities, gs, ns, budget); }; });

  auto* bounds = app.add_subcommand("bounds", "Bounds ledger and trivial bounds");
  bounds->add_option("--g", g);
  bounds->add_option("--N", n);
  bounds->add_option("--G", group);
  bounds->callback([&] { action = [&] { return cmd_bounds(c, g, n, group); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // message and usage go to stderr
    std::cerr << app.help();
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = 2;
  try {
    code = action();
  } catch (const CertificateError& e) {
    std::cerr << "certificate violation: " << e.what() << "\n" << io::to_json(e.verdict()).dump() << "\n";
    std::cout << io::to_json(e.verdict()).dump() << "\n";
    code = 1;
  } catch (const std::logic_error& e) {
    // invalid_argument and domain_error derive from logic_error; oracle mismatches too.
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  }
  if (!c.manifest.empty()) {
    try {
      write_manifest(c, argc, argv, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), code);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return code;
}
