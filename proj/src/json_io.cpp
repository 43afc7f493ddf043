#include "diffset/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace diffset::io {

namespace {

Json rational_str(const Rational& r) { return to_string(r); }

std::int64_t as_int(const Json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("expected integer, got " + j.dump());
  return j.get<std::int64_t>();
}

Rational as_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<std::int64_t>()));
  throw std::invalid_argument("expected rational string, got " + j.dump());
}

Json sqrt_scaled(const SqrtScaled& s) {
  return Json{{"coef", rational_str(s.coef)}, {"radicand", rational_str(s.radicand)}, {"approx", round6(s.to_double())}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

double round6(double x) { return std::round(x * 1e6) / 1e6; }

Json to_json(const IntSet& a) {
  Json j = Json::array();
  for (auto x : a.elements()) j.push_back(x);
  return j;
}

IntSet int_set_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("set must be a JSON array of integers");
  std::vector<std::int64_t> v;
  for (const auto& x : j) v.push_back(as_int(x));
  return IntSet(std::move(v));
}

Json to_json(const GroupSubset& a) {
  Json elems = Json::array();
  for (const auto& e : a.elements()) elems.push_back(e);
  Json factors = Json::array();
  for (auto f : a.group().invariant_factors()) factors.push_back(f);
  return Json{{"invariant_factors", factors}, {"elements", elems}};
}

GroupSubset group_subset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("invariant_factors") || !j.contains("elements")) {
    throw std::invalid_argument("group subset needs invariant_factors and elements");
  }
  std::vector<std::int64_t> factors;
  for (const auto& f : j.at("invariant_factors")) factors.push_back(as_int(f));
  GroupSpec group(std::move(factors));
  std::vector<GroupSpec::Element> elems;
  for (const auto& e : j.at("elements")) {
    GroupSpec::Element el;
    if (e.is_array()) {
      for (const auto& c : e) el.push_back(as_int(c));
    } else {
      el.push_back(as_int(e));
    }
    elems.push_back(std::move(el));
  }
  return GroupSubset(std::move(group), elems);
}

Json to_json(const Verdict& v) {
  Json w = std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return Json(x);
        }
      },
      v.witness);
  return Json{{"passed", v.passed}, {"achieved_g", v.achieved_g}, {"witness", w}};
}

Json to_json(const RepProfile& p) {
  Json j{{"mode", p.mode == RepMode::difference ? "difference" : "sum"},
         {"counts", p.counts},
         {"min", p.min_count},
         {"max", p.max_count},
         {"total", p.total()}};
  if (p.group) {
    Json factors = Json::array();
    for (auto f : p.group->invariant_factors()) factors.push_back(f);
    j["invariant_factors"] = factors;
  } else {
    j["lo"] = p.lo;
    j["hi"] = p.hi;
  }
  return j;
}

Json to_json(const TrivialBounds& b) {
  return Json{{"sqrt", round6(b.sqrt_value)},
              {"eta_lb", optional_json(b.eta_lb)},
              {"beta_ub", optional_json(b.beta_ub)},
              {"gamma_lb", optional_json(b.gamma_lb)},
              {"gamma_strict_lb", optional_json(b.gamma_strict_lb)},
              {"alpha_ub", optional_json(b.alpha_ub)},
              {"warnings", b.warnings}};
}

Json to_json(const BoundsLedger& l) {
  auto iv = [](const Interval& i) { return Json::array({rational_str(i.lower), rational_str(i.upper)}); };
  return Json{{"sigma", iv(l.sigma)}, {"tau", iv(l.tau)}, {"g2_constants", iv(l.g2_constants)}};
}

Json to_json(const ParabolaUnion& u) {
  return Json{{"p", u.p},
              {"k", u.k},
              {"t", u.t},
              {"S_t", u.score},
              {"guaranteed_g", u.guaranteed_g},
              {"vacuous", u.vacuous},
              {"verified_g", u.verified_g},
              {"enumeration", u.enumeration == Enumeration::exhaustive ? "exhaustive" : "sampled"},
              {"instance_bound", u.instance_bound},
              {"instance_bound_holds", u.instance_bound_holds},
              {"elements", to_json(u.set).at("elements")}};
}

Json to_json(const PipelineReport& r) {
  Json lifted = Json::array();
  for (auto x : r.lifted.indices()) lifted.push_back(x);
  Json base = to_json(r.base);
  base.erase("elements");
  return Json{{"base", base},
              {"s", r.s},
              {"modulus", r.lifted.group().order()},
              {"size", r.lifted.size()},
              {"elements", lifted},
              {"formula_g", r.formula_g},
              {"inherited_g", r.inherited_g},
              {"verified_g", optional_json(r.verified_g)},
              {"ratio", r.ratio ? Json(round6(*r.ratio)) : Json(nullptr)},
              {"advisory_k", r.advisory_k}};
}

Json to_json(const StepFunction& f) {
  Json bps = Json::array(), vals = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(rational_str(b));
  for (const auto& c : f.coefs()) vals.push_back(rational_str(c));
  Json scale = nullptr;
  if (f.has_sqrt_scale()) {
    scale = Json{{"num", f.radicand().get_num().get_str()}, {"den", f.radicand().get_den().get_str()}};
  }
  return Json{{"breakpoints", bps}, {"values", vals}, {"scale_sqrt", scale}};
}

StepFunction step_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values")) {
    throw std::invalid_argument("step function needs breakpoints and values");
  }
  std::vector<Rational> bps, vals;
  for (const auto& b : j.at("breakpoints")) bps.push_back(as_rational(b));
  for (const auto& v : j.at("values")) vals.push_back(as_rational(v));
  Rational radicand = 1;
  if (j.contains("scale_sqrt") && !j.at("scale_sqrt").is_null()) {
    const auto& s = j.at("scale_sqrt");
    auto part = [](const Json& x) { return x.is_string() ? Integer(x.get<std::string>()) : Integer(as_int(x)); };
    radicand = Rational(part(s.at("num")), part(s.at("den")));
    radicand.canonicalize();
  }
  return StepFunction(std::move(bps), std::move(vals), radicand);
}

Json to_json(const FamilyVerdict& v) {
  return Json{{"member", v.member},
              {"extremum", rational_str(v.extremum.value)},
              {"at", rational_str(v.extremum.at)},
              {"extremum_approx", round6(v.extremum.value.get_d())}};
}

Json to_json(const AveragesResult& r) {
  const auto& s = r.seq;
  const auto& c = r.conditions;
  Json coefs = Json::array();
  for (const auto& x : s.coefs) coefs.push_back(rational_str(x));
  return Json{{"N", s.n},
              {"L", s.window},
              {"tau_hat", rational_str(s.tau_hat)},
              {"stretch", rational_str(s.stretch)},
              {"realized_epsilon", rational_str(s.realized_epsilon())},
              {"offset", s.offset},
              {"coefs", coefs},
              {"radicand", rational_str(s.radicand)},
              {"conditions",
               {{"sum", sqrt_scaled(c.sum)},
                {"sum_bound", rational_str(c.sum_bound)},
                {"sum_ok", c.sum_ok},
                {"max_share", rational_str(c.max_share)},
                {"max_ok", c.max_ok},
                {"m_max", c.m_max},
                {"min_pair_sum", c.min_pair_sum ? Json(rational_str(*c.min_pair_sum)) : Json(nullptr)},
                {"min_pair_shift", optional_json(c.min_pair_shift)},
                {"pair_bound", rational_str(c.pair_bound)},
                {"pair_ok", optional_json(c.pair_ok)}}}};
}

Json to_json(const ProbSeq& p) {
  Json w = Json::array();
  for (const auto& x : p.weights()) w.push_back(rational_str(x));
  return Json{{"offset", p.offset()},
              {"weights", w},
              {"mass", {{"coef", rational_str(p.mass().coef)}, {"cbrt_radicand", rational_str(p.mass().radicand)}}},
              {"expected_size", round6(p.expected_size())}};
}

Json to_json(const TorusStepFunction& t) {
  Json j = to_json(GroupSubset::whole(t.group));
  Json cells = Json::array();
  for (const auto& c : t.cell_coefs) cells.push_back(rational_str(c));
  j["cell_values"] = cells;
  j["scale_sqrt"] = t.radicand == 1 ? Json(nullptr)
                                    : Json{{"num", t.radicand.get_num().get_str()},
                                           {"den", t.radicand.get_den().get_str()}};
  return j;
}

Json to_json(const MonteCarloReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.per_trial) {
    trials.push_back(Json{{"index", t.index},
                          {"seed", t.seed},
                          {"size", t.size},
                          {"achieved_g", t.achieved_g},
                          {"success", t.success}});
  }
  Json tails = Json::array();
  for (const auto& t : r.tails) {
    tails.push_back(Json{{"event", t.event},
                         {"delta", round6(t.delta)},
                         {"frequency", round6(t.frequency)},
                         {"bound", round6(t.bound)},
                         {"limit", round6(t.limit)},
                         {"ok", t.ok}});
  }
  return Json{{"model", r.model},
              {"per_trial", trials},
              {"aggregate",
               {{"trials", r.trials},
                {"master_seed", r.master_seed},
                {"required_g", r.required_g},
                {"max_size", r.max_size},
                {"expected_size", round6(r.expected_size)},
                {"success_rate", round6(r.success_rate)},
                {"tails", tails},
                {"tails_ok", r.tails_ok}}}};
}

Json to_json(const ExtremalResult& r) {
  Json j{{"quantity", to_string(r.quantity)},
         {"g", r.g},
         {"value", r.value},
         {"exhaustive", r.exhaustive},
         {"nodes", r.nodes},
         {"proven_bound", r.proven_bound}};
  if (r.n) {
    j["N"] = *r.n;
  }
  if (r.quantity == Quantity::eta) j["window"] = r.window;
  if (r.group) {
    Json factors = Json::array();
    for (auto f : r.group->invariant_factors()) factors.push_back(f);
    j["invariant_factors"] = factors;
  }
  if (const auto* s = std::get_if<IntSet>(&r.witness)) {
    j["witness"] = to_json(*s);
  } else {
    j["witness"] = to_json(std::get<GroupSubset>(r.witness)).at("elements");
  }
  return j;
}

Json to_json(const std::vector<RatioRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"quantity", to_string(r.quantity)},
                       {"g", r.g},
                       {"param", r.param},
                       {"value", r.value},
                       {"ratio", round6(r.ratio)},
                       {"flag", r.flag}});
  }
  return arr;
}

std::string to_csv(const std::vector<RatioRow>& rows) {
  std::string out = "quantity,g,param,value,ratio,flag\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.ratio);
    std::string flag = r.flag;
    if (flag.find(',') != std::string::npos) flag = "\"" + flag + "\"";
    out += to_string(r.quantity) + "," + std::to_string(r.g) + "," + std::to_string(r.param) + "," +
           std::to_string(r.value) + "," + buf + "," + flag + "\n";
  }
  return out;
}

}  // namespace diffset::io
