#include <gtest/gtest.h>

#include <random>

#include "diffset/averages.hpp"
#include "diffset/representation.hpp"
#include "diffset/step_function.hpp"
#include "diffset/torus.hpp"
#include "oracles.hpp"

using namespace diffset;

namespace {

oracle::Step as_oracle(const StepFunction& f) { return {f.breakpoints(), f.coefs()}; }

StepFunction random_step(std::mt19937_64& rng) {
  std::size_t pieces = 1 + rng() % 5;
  std::vector<Rational> bp{ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4))};
  std::vector<Rational> coefs;
  for (std::size_t i = 0; i < pieces; ++i) {
    bp.push_back(bp.back() + ratio(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3)));
    coefs.push_back(ratio(static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3)));
  }
  return StepFunction(bp, coefs);
}

}  // namespace

TEST(StepFunction, Construction) {
  EXPECT_THROW(StepFunction({0, 1}, {Rational(-1)}), std::invalid_argument);
  EXPECT_THROW(StepFunction({1, 0}, {Rational(1)}), std::invalid_argument);
  EXPECT_THROW(StepFunction({0, 1, 2}, {Rational(1)}), std::invalid_argument);
  EXPECT_TRUE(StepFunction().is_zero());
  auto f = StepFunction::box(0, 2, 1);
  EXPECT_EQ(f.l1_norm().coef, 2);
  EXPECT_EQ(f.value_at(Rational(1)).coef, 1);
  EXPECT_EQ(f.value_at(Rational(2)).coef, 0);
  EXPECT_EQ(f.dilated(ratio(3, 2)).support_hi(), 3);
}

TEST(StepFunction, SetToStepExamples) {
  auto f = set_to_step(IntSet{0, 1}, 1, 1);
  EXPECT_EQ(compare(f.l1_norm(), Rational(2)), std::strong_ordering::equal);
  auto h = set_to_step(IntSet{0}, 1, 4);
  EXPECT_EQ(compare(h.value_at(ratio(1, 8)), Rational(2)), std::strong_ordering::equal);
  EXPECT_EQ(compare(h.l1_norm(), ratio(1, 2)), std::strong_ordering::equal);
  EXPECT_EQ(h.support_hi(), ratio(1, 4));
}

TEST(StepFunction, CorrelationExamples) {
  auto f = StepFunction::box(0, 2, 1);
  for (int i = -25; i <= 25; ++i) {
    Rational x = ratio(i, 10);
    Rational expect = std::max(Rational(0), Rational(Rational(2) - abs(x)));
    EXPECT_EQ(autocorrelation(f, x), expect);
  }
  auto m = autocorrelation_min(f, 0, 1);
  EXPECT_EQ(m.value, 1);
  EXPECT_EQ(m.at, 1);
  EXPECT_EQ(autocorrelation_min(StepFunction(), 0, 1).value, 0);

  auto unit = StepFunction::box(0, 1, 1);
  for (int i = 0; i <= 20; ++i) {
    Rational x = ratio(i, 10);
    EXPECT_EQ(autoconvolution(unit, x), Rational(Rational(1) - abs(Rational(x - 1))));
  }
  auto cm = autoconvolution_max(unit);
  EXPECT_EQ(cm.value, 1);
  EXPECT_EQ(cm.at, 1);
  EXPECT_TRUE(check_autoconvolution_family(unit).member);
  EXPECT_TRUE(check_autoconvolution_family(StepFunction()).member);
  EXPECT_FALSE(check_autoconvolution_family(StepFunction::box(0, 1, 2)).member);
  EXPECT_EQ(autoconvolution_max(StepFunction::box(0, 1, 2)).value, 4);
  EXPECT_THROW(check_autoconvolution_family(f), std::invalid_argument);
}

TEST(StepFunction, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_step(rng);
    auto o = as_oracle(f);
    for (int i = -40; i <= 40; ++i) {
      Rational x = ratio(i, 7);
      ASSERT_EQ(autocorrelation(f, x), oracle::correlation(o, x));
      ASSERT_EQ(autocorrelation(f, x), autocorrelation(f, -x));
      ASSERT_EQ(autoconvolution(f, x), oracle::convolution(o, x));
    }
    if (f.is_zero()) continue;
    // The minimum is the least value over the candidate points plus a dense sample.
    auto mn = autocorrelation_min(f, 0, 1);
    EXPECT_EQ(mn.value, autocorrelation_min_breakpoints(f, 0, 1).value);
    EXPECT_EQ(autocorrelation(f, mn.at), mn.value);
    for (int i = 0; i <= 420; ++i) ASSERT_GE(oracle::correlation(o, ratio(i, 420)), mn.value);
    auto mx = autoconvolution_max(f);
    EXPECT_EQ(autoconvolution(f, mx.at), mx.value);
    for (int i = -200; i <= 400; ++i) ASSERT_LE(oracle::convolution(o, ratio(i, 60)), mx.value);
  }
}

TEST(StepFunction, EndpointIdentity) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 20);
    const std::int64_t g = 1 + static_cast<std::int64_t>(rng() % 3);
    std::vector<std::int64_t> v;
    for (std::int64_t x = 0; x <= 2 * n; ++x)
      if (rng() % 2) v.push_back(x);
    if (v.empty()) v.push_back(0);
    IntSet a(v);
    auto f = set_to_step(a, g, n);
    EXPECT_EQ(f.l1_norm().squared(), ratio(static_cast<long>(a.size() * a.size()), g * n));
    for (std::int64_t j = 0; j <= n; ++j) {
      ASSERT_EQ(autocorrelation(f, ratio(j, n)), ratio(oracle::diff_count(v, j), g));
    }
    auto verdict = verify_certificate(a, g, n, CertificateMode::difference);
    EXPECT_EQ(check_autocorrelation_family(f).member, verdict.passed);
  }
}

TEST(Averages, BoxExample) {
  auto f = StepFunction::box(0, 2, 1);
  EXPECT_EQ(averaging_window(64, 2), 16);
  auto r = local_averages(f, 64, 2);
  EXPECT_EQ(r.seq.window, 16);
  EXPECT_EQ(compare(r.seq.sum(), Rational(128)), std::strong_ordering::equal);
  EXPECT_EQ(r.seq.coef_at(64), 1);
  EXPECT_EQ(r.seq.coef_at(-1000), 0);
  EXPECT_EQ(r.seq.coef_at(1000), 0);
  EXPECT_TRUE(r.conditions.sum_ok);
  EXPECT_TRUE(r.conditions.max_ok);
  ASSERT_TRUE(r.conditions.pair_ok);
  EXPECT_TRUE(*r.conditions.pair_ok);
  EXPECT_EQ(r.conditions.pair_bound, ratio(31 * 64, 32));
  EXPECT_EQ(r.conditions.m_max, 64 - 32 + 1);
}

TEST(Averages, Errors) {
  auto f = StepFunction::box(0, 2, 1);
  EXPECT_THROW(local_averages(f, 4, 2), std::invalid_argument);  // L = 3, 2L - 1 >= N
  EXPECT_NO_THROW(local_averages(f, 8, 2));                      // L = 4
  EXPECT_THROW(local_averages(StepFunction::box(0, 1, 1), 64, 2), std::invalid_argument);
}

TEST(Averages, DirectWindowMeans) {
  // a_i = (N / 2L) * integral over [(i-L)/N, (i+L)/N], recomputed by the oracle.
  auto f = StepFunction({0, ratio(1, 3), ratio(3, 2), 2}, {Rational(2), Rational(1), ratio(3, 2)});
  ASSERT_TRUE(check_autocorrelation_family(f).member);
  const std::int64_t n = 125;
  auto r = local_averages(f, n, ratio(8, 5));
  const std::int64_t l = r.seq.window;
  EXPECT_EQ(l, 20);  // ceil(0.8 * 25)
  auto o = as_oracle(f);
  for (std::int64_t i = r.seq.first_index() - 3; i <= r.seq.last_index() + 3; ++i) {
    Rational lo = ratio(i - l, n), hi = ratio(i + l, n);
    std::vector<Rational> pts{lo, hi};
    for (const auto& b : f.breakpoints())
      if (b > lo && b < hi) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    Rational integral = 0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) integral += o.at((pts[k] + pts[k + 1]) / 2) * (pts[k + 1] - pts[k]);
    ASSERT_EQ(r.seq.coef_at(i), integral * ratio(n, 2 * l)) << i;
  }
  EXPECT_TRUE(r.conditions.pair_ok.value_or(false));
}

TEST(Averages, StretchCoversAllShifts) {
  auto f = StepFunction::box(0, 2, 1);
  AveragesOptions opts;
  opts.stretch = true;
  auto r = local_averages(f, 216, 2, opts);
  EXPECT_EQ(r.seq.window, 36);
  EXPECT_EQ(r.seq.stretch, ratio(216, 216 - 72 + 1));
  EXPECT_EQ(r.conditions.m_max, 216);
  EXPECT_EQ(r.seq.realized_epsilon(), r.seq.stretch - 1);
  EXPECT_TRUE(r.conditions.pair_ok.value_or(false));
}

TEST(Averages, ProbabilitiesNormalized) {
  auto f = StepFunction::box(0, 2, 1);
  auto r = local_averages(f, 1000, 2);
  auto p = averages_to_probs(r.seq);
  // sum p_i = tau N^{2/3} = 2 * 100 = 200 exactly
  EXPECT_EQ(compare(CubeRootScaled{p.mass().coef * p.weight_sum(), p.mass().radicand}, Rational(200)),
            std::strong_ordering::equal);
  EXPECT_NEAR(p.expected_size(), 200.0, 1e-9);
  for (auto x : p.probabilities()) {
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 1.0);
  }
  // Concentrated averages violate p_i <= 1.
  AveragesSeq spike = r.seq;
  spike.coefs.assign(3, Rational(1));
  spike.offset = 0;
  EXPECT_THROW(averages_to_probs(spike), std::domain_error);
}

TEST(Averages, PairCorrelation) {
  auto f = StepFunction::box(0, 2, 1);
  AveragesOptions opts;
  opts.stretch = true;
  auto r = local_averages(f, 1000, 2, opts);
  auto p = averages_to_probs(r.seq);
  auto c = check_pair_correlation(p, 1000, r.seq.realized_epsilon());
  EXPECT_TRUE(c.holds);
  EXPECT_GE(c.worst_shift, 1);
  EXPECT_LE(c.worst_shift, 1000);
}

TEST(Torus, Examples) {
  GroupSpec g = GroupSpec::cyclic(7);
  auto h = group_set_to_torus(GroupSubset::whole(g), 7);
  for (const auto& c : h.cell_coefs) EXPECT_EQ(c * c * h.radicand, 1);
  EXPECT_EQ(compare(h.l1_norm(), Rational(1)), std::strong_ordering::equal);
  EXPECT_EQ(h.autocorrelation_min().first, 1);

  auto q = group_set_to_torus(GroupSubset(g, {{1}, {2}, {4}}), 1);
  EXPECT_EQ(q.l1_norm().squared(), ratio(9, 7));
  EXPECT_EQ(q.autocorrelation_min().first, 1);

  auto s = group_set_to_torus(GroupSubset(GroupSpec::cyclic(9), {{0}}), 1);
  EXPECT_EQ(s.autocorrelation_min().first, 0);
}

TEST(Torus, MatchesProfile) {
  std::mt19937_64 rng(21);
  for (const auto& f : std::vector<std::vector<std::int64_t>>{{10}, {2, 4}, {3, 3}}) {
    GroupSpec g(f);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::int64_t> idx;
      for (std::int64_t i = 0; i < g.order(); ++i)
        if (rng() % 2) idx.push_back(i);
      if (idx.empty()) idx.push_back(0);
      auto a = GroupSubset::from_indices(g, idx);
      const std::int64_t gg = 1 + static_cast<std::int64_t>(rng() % 3);
      auto h = group_set_to_torus(a, gg);
      auto prof = group_rep_profile(a, RepMode::difference);
      for (std::int64_t x = 0; x < g.order(); ++x) ASSERT_EQ(h.autocorrelation_at(x), ratio(prof.at(x), gg));
      if (h.autocorrelation_min().first >= 1) {
        EXPECT_GE(h.l1_norm().squared(), 1);
      }
    }
  }
}
