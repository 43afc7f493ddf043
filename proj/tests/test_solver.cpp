#include <gtest/gtest.h>

#include <cmath>

#include "diffset/representation.hpp"
#include "diffset/solver.hpp"
#include "oracles.hpp"

using namespace diffset;

namespace {

std::vector<std::int64_t> vec(const IntSet& a) { return {a.elements().begin(), a.elements().end()}; }

}  // namespace

TEST(Solver, EtaSmallValues) {
  EXPECT_EQ(eta_exact(1, 1).value, 2);
  EXPECT_EQ(eta_exact(1, 2).value, 3);
  auto r = eta_exact(1, 3);
  EXPECT_EQ(r.value, 3);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(std::get<IntSet>(r.witness), (IntSet{0, 1, 3}));
}

TEST(Solver, EtaMatchesNaiveEnumeration) {
  for (std::int64_t g = 1; g <= 2; ++g)
    for (std::int64_t n = 1; n <= 6; ++n) {
      auto r = eta_exact(g, n);
      auto naive = oracle::eta(g, n, 2 * n);
      ASSERT_TRUE(naive.has_value());
      EXPECT_EQ(r.value, *naive) << "g=" << g << " N=" << n;
      EXPECT_TRUE(oracle::is_difference_set(vec(std::get<IntSet>(r.witness)), g, n));
    }
}

TEST(Solver, EtaWitnessIsLexSmallest) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    auto r = eta_exact(1, n);
    std::optional<std::vector<std::int64_t>> first;
    oracle::for_each_subset(oracle::range(0, 2 * n), static_cast<std::size_t>(r.value), [&](const auto& a) {
      if (a.front() == 0 && oracle::is_difference_set(a, 1, n)) {
        first = a;
        return true;
      }
      return false;
    });
    ASSERT_TRUE(first);
    EXPECT_EQ(vec(std::get<IntSet>(r.witness)), *first) << n;
  }
}

TEST(Solver, EtaWindowGrowsForLargeG) {
  // {0, 1, 2} gives r(1) = 2 only, so g = 3 needs more room than [0, 2].
  auto r = eta_exact(3, 1);
  EXPECT_EQ(r.value, 4);
  EXPECT_GE(r.window, 3);
  SearchConfig fixed;
  fixed.window = 2;
  EXPECT_THROW(eta_exact(3, 1, fixed), std::runtime_error);
}

TEST(Solver, EtaBudgetExhausted) {
  SearchConfig cfg;
  cfg.node_budget = 5;
  auto r = eta_exact(1, 14, cfg);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(oracle::is_difference_set(vec(std::get<IntSet>(r.witness)), 1, 14));
  EXPECT_GE(r.value, eta_exact(1, 14).value);
}

TEST(Solver, SymmetryReductionsDoNotChangeValue) {
  SearchConfig plain;
  plain.fix_translation = false;
  plain.reflection = false;
  for (std::int64_t g = 1; g <= 2; ++g)
    for (std::int64_t n = 1; n <= 8; ++n) EXPECT_EQ(eta_exact(g, n, plain).value, eta_exact(g, n).value);
}

TEST(Solver, GammaMatchesNaive) {
  auto r = gamma_exact(1, GroupSpec::cyclic(7));
  EXPECT_EQ(r.value, 3);
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t g = 1; g <= 3 && g <= n; ++g) {
      auto res = gamma_exact(g, GroupSpec::cyclic(n));
      EXPECT_EQ(res.value, oracle::gamma_cyclic(g, n)) << g << " " << n;
      EXPECT_TRUE(verify_certificate(std::get<GroupSubset>(res.witness), g, CertificateMode::difference).passed);
    }
  EXPECT_THROW(gamma_exact(5, GroupSpec::cyclic(4)), std::invalid_argument);
  auto klein = gamma_exact(2, GroupSpec({2, 2}));
  EXPECT_TRUE(verify_certificate(std::get<GroupSubset>(klein.witness), 2, CertificateMode::difference).passed);
}

TEST(Solver, BetaMatchesNaive) {
  EXPECT_EQ(beta_exact(2, 5).value, 3);
  EXPECT_EQ(beta_exact(2, 1).value, 1);
  for (std::int64_t g = 1; g <= 4; ++g)
    for (std::int64_t n = 1; n <= 12; ++n) {
      auto r = beta_exact(g, n);
      EXPECT_EQ(r.value, oracle::beta(g, n)) << g << " " << n;
      EXPECT_TRUE(r.exhaustive);
      EXPECT_TRUE(oracle::is_sidon_set(vec(std::get<IntSet>(r.witness)), g, n));
    }
  for (std::int64_t n = 1; n <= 6; ++n) EXPECT_EQ(beta_exact(2 * n, n).value, n);
}

TEST(Solver, AlphaMatchesNaive) {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t g = 1; g <= 4; ++g) {
      auto r = alpha_exact(g, GroupSpec::cyclic(n));
      EXPECT_EQ(r.value, oracle::alpha_cyclic(g, n)) << g << " " << n;
      EXPECT_TRUE(verify_certificate(std::get<GroupSubset>(r.witness), g, CertificateMode::sidon).passed);
    }
}

TEST(Solver, Deterministic) {
  auto a = eta_exact(2, 9), b = eta_exact(2, 9);
  EXPECT_EQ(std::get<IntSet>(a.witness), std::get<IntSet>(b.witness));
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Solver, QuantityNames) {
  for (auto q : {Quantity::eta, Quantity::gamma, Quantity::beta, Quantity::alpha}) EXPECT_EQ(parse_quantity(to_string(q)), q);
  EXPECT_THROW(parse_quantity("delta"), std::invalid_argument);
}

TEST(RatioReport, Flags) {
  auto ledger = BoundsLedger::standard();
  std::vector<ExtremalResult> rs{eta_exact(1, 1), eta_exact(1, 3), gamma_exact(1, GroupSpec::cyclic(7))};
  auto rows = ratio_report(rs, ledger);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].ratio, 2.0, 1e-12);
  EXPECT_NEAR(rows[1].ratio, 3.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(rows[2].ratio, 3.0 / std::sqrt(7.0), 1e-12);
  for (const auto& r : rows) EXPECT_EQ(r.flag, "ok");

  // A fabricated exhaustive eta row below tau and below the trivial bound.
  ExtremalResult fake = rs[1];
  fake.value = 2;
  rows = ratio_report({rs[0], fake}, ledger);
  EXPECT_NE(rows[1].flag.find("FATAL:below-tau"), std::string::npos);
  EXPECT_NE(rows[1].flag.find("trivial-bound"), std::string::npos);
  // eta(1) = 2 > fake eta(3) = 2? equal, so only a strict drop is flagged.
  ExtremalResult drop = rs[1];
  drop.value = 1;
  rows = ratio_report({rs[0], drop}, ledger);
  EXPECT_NE(rows[1].flag.find("non-monotone"), std::string::npos);
}
