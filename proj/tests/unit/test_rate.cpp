#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "levyld/levy_model.hpp"
#include "levyld/rate.hpp"
#include "levyld/set_oracle.hpp"

using namespace levyld;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

CadlagPath three_jumps() { return CadlagPath::step({{0.3, 2.0}, {0.6, -1.0}, {0.8, 0.5}}); }

CadlagPath random_step(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_real_distribution<double> t(0.0, 1.0), s(-3.0, 3.0);
  std::vector<JumpEvent> j;
  const int n = count(gen);
  for (int i = 0; i < n; ++i) j.push_back({1.0 - t(gen), s(gen)});
  return CadlagPath::step(j);
}

SearchConfig quick_search() {
  SearchConfig s;
  s.seed = 17;
  return s;
}

}  // namespace

TEST(JumpCounts, Examples) {
  EXPECT_EQ(jump_counts(three_jumps(), 0.1), (JumpProfile{2, 1}));
  EXPECT_EQ(jump_counts(CadlagPath::from_function([](double t) { return t; }, 0.25)), (JumpProfile{0, 0}));
  EXPECT_EQ(jump_counts(three_jumps(), 1.5), (JumpProfile{1, 0}));
}

TEST(RateI, Examples) {
  EXPECT_EQ(rate_I(CadlagPath::zero(), 1.5, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(rate_I(CadlagPath::step({{0.3, 1.0}, {0.7, -2.0}}), 1.5, 2.0), 1.5);
  EXPECT_EQ(rate_I(CadlagPath::from_function([](double t) { return 0.2 * t; }, 1.0 / 64), 1.5, 2.0), kInf);
  EXPECT_EQ(rate_I(CadlagPath::step({{0.3, 1.0}}, 0.5), 1.5, 2.0), kInf);
}

TEST(RateITilde, Examples) {
  const CadlagPath eta = CadlagPath::step({{0.3, 1.0}, {0.7, -2.0}});
  EXPECT_EQ(rate_I_tilde(eta, drift_zero(), 1.5, 2.0), rate_I(eta, 1.5, 2.0));
  const CadlagPath ramp = CadlagPath::from_function([](double t) { return t * t; }, 1.0 / 64);
  EXPECT_EQ(rate_I_tilde(ramp, drift_zero(), 1.5, 2.0), kInf);

  const DriftSpec d = drift_cos_scaled(0.2);
  EXPECT_DOUBLE_EQ(rate_I_tilde(apply_F(d, eta), d, 1.5, 2.0), 1.5);

  SimConfig sc;
  sc.epsilon = 0.2;
  TailModel bm = stable_preset(1.5);
  bm.c_plus = bm.c_minus = 0.0;
  bm.sigma = 1.0;
  EXPECT_EQ(rate_I_tilde(sample_scaled_path(bm, sc), d, 1.5, 2.0), kInf);
}

TEST(RateITilde, EqualsRateOfPreimageOnRandomStepPaths) {
  std::mt19937_64 gen(31);
  const std::vector<DriftSpec> drifts = {drift_zero(), drift_const(0.3), drift_cos_scaled(0.2),
                                         drift_tanh_scaled(0.5)};
  for (int i = 0; i < 1000; ++i) {
    const CadlagPath eta = random_step(gen);
    const DriftSpec& d = drifts[static_cast<std::size_t>(i) % drifts.size()];
    const CadlagPath xi = apply_F(d, eta);
    EXPECT_EQ(rate_I_tilde(xi, d, 1.5, 2.0), rate_I(eta, 1.5, 2.0));
    EXPECT_EQ(jump_counts(apply_F_inverse(d, xi)), jump_counts(xi));
    EXPECT_LE(rate_pi_induced(largest_jumps_pi(xi), 1.5, 2.0), rate_I_tilde(xi, d, 1.5, 2.0));
  }
}

TEST(CostJk, Examples) {
  EXPECT_DOUBLE_EQ(cost_jk(1, 1, 1.5, 2.0), 1.5);
  EXPECT_EQ(cost_jk(0, 0, 1.5, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(cost_jk(2, 0, 1.5, 2.0), 1.0);
}

TEST(EnumerateCostOrder, Examples) {
  const auto v = enumerate_cost_order(1.5, 2.0, 1.0);
  ASSERT_EQ(v.size(), 4u);
  const int expect[4][2] = {{0, 0}, {1, 0}, {2, 0}, {0, 1}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(v[i].j, expect[i][0]);
    EXPECT_EQ(v[i].k, expect[i][1]);
  }
  EXPECT_EQ(v[2].level, v[3].level);
  EXPECT_LT(v[1].level, v[2].level);

  const auto z = enumerate_cost_order(1.5, 2.0, 0.0);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0].j + z[0].k, 0);

  for (const auto& p : enumerate_cost_order(1.7, 1.7, 3.0)) {
    EXPECT_DOUBLE_EQ(p.cost, 0.7 * (p.j + p.k));
    for (const auto& q : enumerate_cost_order(1.7, 1.7, 3.0))
      EXPECT_EQ(p.level == q.level, p.j + p.k == q.j + q.k);
  }
}

TEST(Argmin, SupExceedNeedsOneUpJump) {
  const SetOracle A = set_sup_exceed(1.0);
  const DriftSpec d = drift_cos_scaled(0.2);
  const auto r = argmin_jk(search_oracle(A, d, quick_search()), 1.5, 2.0, 3.0);
  ASSERT_TRUE(r.found);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].j, 1);
  EXPECT_EQ(r.pairs[0].k, 0);
  EXPECT_DOUBLE_EQ(r.cost, 0.5);
  const CadlagPath& w = r.witnesses.at(0);
  ASSERT_EQ(w.jumps().size(), 1u);
  EXPECT_GT(w.jumps()[0].size, 0.8);
  EXPECT_TRUE(A.contains_inner(apply_F(d, w)));
}

TEST(Argmin, TwoSidedNeedsOneOfEach) {
  const SetOracle A = set_two_sided(1.0, 1.0);
  const auto r = argmin_jk(search_oracle(A, drift_cos_scaled(0.2), quick_search()), 1.5, 2.0, 3.0);
  ASSERT_TRUE(r.found);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].j, 1);
  EXPECT_EQ(r.pairs[0].k, 1);
}

TEST(Argmin, SetContainingImageOfZero) {
  const DriftSpec d = drift_cos_scaled(0.2);
  const SetOracle A = set_terminal(0.0, 1.0);
  const auto r = argmin_jk(search_oracle(A, d, quick_search()), 1.5, 2.0, 3.0);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.pairs[0].j + r.pairs[0].k, 0);
}

TEST(Argmin, EmptyWithinBound) {
  const auto r = argmin_jk([](int, int) { return Feasibility{Verdict::infeasible, std::nullopt}; },
                           1.5, 2.0, 1.0);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.message, "argmin empty within bound");
}

TEST(Argmin, ReportsTies) {
  // Feasible at (2,0) and (0,1), both of cost 1.
  auto oracle = [](int j, int k) {
    const bool ok = (j == 2 && k == 0) || (j == 0 && k == 1);
    return Feasibility{ok ? Verdict::feasible : Verdict::infeasible,
                       ok ? std::optional<CadlagPath>(CadlagPath::zero()) : std::nullopt};
  };
  const auto r = argmin_jk(oracle, 1.5, 2.0, 2.0);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.pairs.size(), 2u);
  EXPECT_DOUBLE_EQ(r.cost, 1.0);
}

TEST(Argmin, WitnessListOracle) {
  const DriftSpec d = drift_cos_scaled(0.2);
  const SetOracle A = set_sup_exceed(1.0);
  const auto oracle = witness_list_oracle(A, d, {CadlagPath::step({{0.5, 1.5}})});
  EXPECT_EQ(oracle(1, 0).verdict, Verdict::feasible);
  EXPECT_EQ(oracle(0, 1).verdict, Verdict::unknown);
}

TEST(Pi, Examples) {
  EXPECT_EQ(largest_jumps_pi(three_jumps()), std::make_pair(2.0, 1.0));
  EXPECT_EQ(largest_jumps_pi(CadlagPath::zero()), std::make_pair(0.0, 0.0));
  std::mt19937_64 gen(33);
  const DriftSpec d = drift_cos_scaled(0.2);
  for (int i = 0; i < 100; ++i) {
    const CadlagPath g = random_step(gen);
    EXPECT_EQ(largest_jumps_pi(apply_F(d, g)), largest_jumps_pi(g));
  }
}

TEST(Pi, InducedRateMatchesBruteForce) {
  EXPECT_EQ(rate_pi_induced({0.0, 0.0}, 1.5, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(rate_pi_induced({2.0, 0.0}, 1.5, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(rate_pi_induced({2.0, 1.0}, 1.5, 2.0), 1.5);
  // inf of I over step paths with <= 3 jumps on a size grid whose pi equals y.
  const double sizes[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  for (auto y : {std::make_pair(2.0, 0.0), std::make_pair(2.0, 1.0), std::make_pair(0.5, 2.0)}) {
    double best = kInf;
    for (int n = 0; n <= 3; ++n) {
      int combos = 1;
      for (int i = 0; i < n; ++i) combos *= 6;
      for (int c = 0; c < combos; ++c) {
        std::vector<JumpEvent> j;
        for (int i = 0, r = c; i < n; ++i, r /= 6) j.push_back({0.2 * (i + 1), sizes[r % 6]});
        const CadlagPath x = CadlagPath::step(j);
        if (largest_jumps_pi(x) == y) best = std::min(best, rate_I(x, 1.5, 2.0));
      }
    }
    EXPECT_DOUBLE_EQ(rate_pi_induced(y, 1.5, 2.0), best);
  }
}

TEST(InfRate, Examples) {
  const DriftSpec d = drift_cos_scaled(0.2);
  const InfRate a = inf_rate_over_set(set_sup_exceed(1.0), d, 1.5, 1.5, quick_search());
  ASSERT_TRUE(a.found);
  EXPECT_DOUBLE_EQ(a.value, 0.5);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_TRUE(set_sup_exceed(1.0).contains_inner(apply_F(d, *a.witness)));

  const InfRate w = inf_rate_over_set(set_whole(), d, 1.5, 1.5, quick_search());
  EXPECT_EQ(w.value, 0.0);

  const InfRate t = inf_rate_over_set(set_terminal(-50.0, -1.0), d, 1.5, 2.0, quick_search());
  ASSERT_TRUE(t.found);
  EXPECT_DOUBLE_EQ(t.value, 1.0);
  EXPECT_EQ(t.j, 0);
  EXPECT_EQ(t.k, 1);

  const InfRate e = inf_rate_over_set(set_empty(), d, 1.5, 2.0, quick_search(), 1.0);
  EXPECT_FALSE(e.found);
  EXPECT_EQ(e.value, kInf);
}

TEST(InfRate, AgreesWithArgminCost) {
  const DriftSpec d = drift_tanh_scaled(0.3);
  for (const SetOracle& A : {set_sup_exceed(1.5), set_two_sided(0.8, 1.2), set_large_jumps(2, 0.5, 0, 1.0)}) {
    const InfRate r = inf_rate_over_set(A, d, 1.5, 2.0, quick_search());
    const auto m = argmin_jk(search_oracle(A, d, quick_search()), 1.5, 2.0, 4.0);
    ASSERT_TRUE(r.found && m.found) << A.name;
    EXPECT_DOUBLE_EQ(r.value, m.cost) << A.name;
  }
}
