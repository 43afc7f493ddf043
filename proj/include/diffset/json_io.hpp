#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "diffset/averages.hpp"
#include "diffset/bounds.hpp"
#include "diffset/composition.hpp"
#include "diffset/group.hpp"
#include "diffset/int_set.hpp"
#include "diffset/monte_carlo.hpp"
#include "diffset/parabola.hpp"
#include "diffset/representation.hpp"
#include "diffset/solver.hpp"
#include "diffset/step_function.hpp"
#include "diffset/torus.hpp"

namespace diffset::io {

using Json = nlohmann::json;

/// Rounds to 6 decimals so that float output is stable across platforms.
double round6(double x);

Json to_json(const IntSet& a);
IntSet int_set_from_json(const Json& j);

Json to_json(const GroupSubset& a);
GroupSubset group_subset_from_json(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const RepProfile& p);
Json to_json(const TrivialBounds& b);
Json to_json(const BoundsLedger& l);

Json to_json(const ParabolaUnion& u);
Json to_json(const PipelineReport& r);

Json to_json(const StepFunction& f);
StepFunction step_function_from_json(const Json& j);
Json to_json(const FamilyVerdict& v);
Json to_json(const AveragesResult& r);
Json to_json(const ProbSeq& p);
Json to_json(const TorusStepFunction& t);

Json to_json(const MonteCarloReport& r);
Json to_json(const ExtremalResult& r);
Json to_json(const std::vector<RatioRow>& rows);
std::string to_csv(const std::vector<RatioRow>& rows);

}  // namespace diffset::io
