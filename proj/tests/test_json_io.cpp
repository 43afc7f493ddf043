#include <gtest/gtest.h>

#include "diffset/json_io.hpp"

using namespace diffset;
using diffset::io::Json;

TEST(JsonIo, IntSetRoundTrip) {
  IntSet a{5, -2, 0};
  Json j = io::to_json(a);
  EXPECT_EQ(j.dump(), "[-2,0,5]");
  EXPECT_EQ(io::int_set_from_json(Json::parse(j.dump())), a);
  EXPECT_THROW(io::int_set_from_json(Json::parse("[1,1]")), std::invalid_argument);
  EXPECT_THROW(io::int_set_from_json(Json::parse("{\"a\":1}")), std::invalid_argument);
  EXPECT_THROW(io::int_set_from_json(Json::parse("[1.5]")), std::invalid_argument);
}

TEST(JsonIo, GroupSubsetRoundTrip) {
  GroupSubset a(GroupSpec({2, 4}), {{1, 3}, {0, 0}});
  Json j = io::to_json(a);
  EXPECT_EQ(j.dump(), R"({"elements":[[0,0],[1,3]],"invariant_factors":[2,4]})");
  EXPECT_EQ(io::group_subset_from_json(j), a);
  // Cyclic shorthand: bare integers.
  auto c = io::group_subset_from_json(Json::parse(R"({"invariant_factors":[7],"elements":[1,2,4]})"));
  EXPECT_EQ(c.size(), 3u);
}

TEST(JsonIo, Verdict) {
  Verdict v;
  v.passed = false;
  v.achieved_g = 0;
  v.witness = std::int64_t{2};
  EXPECT_EQ(io::to_json(v).dump(), R"({"achieved_g":0,"passed":false,"witness":2})");
  v.witness = std::monostate{};
  EXPECT_TRUE(io::to_json(v)["witness"].is_null());
}

TEST(JsonIo, StepFunctionRoundTrip) {
  auto f = set_to_step(IntSet{0, 2}, 2, 3);
  Json j = io::to_json(f);
  EXPECT_EQ(j["scale_sqrt"]["num"], "3");
  EXPECT_EQ(j["scale_sqrt"]["den"], "2");
  EXPECT_EQ(j["breakpoints"][1], "1/3");
  auto back = io::step_function_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.breakpoints(), f.breakpoints());
  EXPECT_EQ(back.coefs(), f.coefs());
  EXPECT_EQ(back.radicand(), f.radicand());
  EXPECT_TRUE(io::to_json(StepFunction::box(0, 1, 1))["scale_sqrt"].is_null());
}

TEST(JsonIo, RatioCsv) {
  std::vector<RatioRow> rows{{Quantity::eta, 1, 3, 3, 1.7320508, "ok"}};
  EXPECT_EQ(io::to_csv(rows), "quantity,g,param,value,ratio,flag\neta,1,3,3,1.732051,ok\n");
  EXPECT_DOUBLE_EQ(io::to_json(rows)[0]["ratio"].get<double>(), 1.732051);
}
