#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "levyld/error.hpp"
#include "levyld/levy_model.hpp"
#include "levyld/solution_map.hpp"
#include "oracles.hpp"

using namespace levyld;

namespace {

CadlagPath indicator(double t0, double h = 1.0) { return CadlagPath::step({{t0, h}}); }

CadlagPath random_step(std::mt19937_64& gen, int max_jumps = 5) {
  std::uniform_int_distribution<int> count(0, max_jumps);
  std::uniform_real_distribution<double> t(0.0, 1.0), s(-3.0, 3.0);
  std::vector<JumpEvent> j;
  const int n = count(gen);
  for (int i = 0; i < n; ++i) j.push_back({1.0 - t(gen), s(gen)});
  return CadlagPath::step(j);
}

std::vector<DriftSpec> registry() {
  return {drift_zero(), drift_const(0.3), drift_cos_scaled(0.2), drift_tanh_scaled(0.5)};
}

}  // namespace

TEST(ApplyF, ZeroDriftIsIdentity) {
  const CadlagPath g =
      CadlagPath::from_function([](double t) { return std::sin(5 * t); }, 1.0 / 64, {{0.3, 1.0}});
  EXPECT_EQ(apply_F(drift_zero(), g), g);
  EXPECT_EQ(apply_F_inverse(drift_zero(), g), g);
}

TEST(ApplyF, ConstantDriftExamples) {
  const CadlagPath f = apply_F(drift_const(0.5), CadlagPath::zero());
  for (double t : {0.0, 0.25, 0.7, 1.0}) EXPECT_NEAR(f.eval(t), 0.5 * t, 1e-12);

  const CadlagPath h = apply_F(drift_const(1.0), indicator(0.5));
  for (double t : {0.0, 0.3, 0.5, 0.8, 1.0}) EXPECT_NEAR(h.eval(t), t + (t >= 0.5 ? 1.0 : 0.0), 1e-12);
  EXPECT_NEAR(h.eval_left(0.5), 0.5, 1e-12);
}

TEST(ApplyF, CosDriftMatchesFineEuler) {
  const DriftSpec d = drift_cos_scaled(0.2);
  const CadlagPath f = apply_F(d, indicator(0.5));
  oracle::StepFn g{0.0, {{0.5, 1.0}}};
  const std::size_t steps = 1000000;
  const auto ref = oracle::euler_reference([](double y) { return 0.2 * std::cos(y); }, g, steps);
  double gap = 0.0;
  for (std::size_t i = 0; i <= steps; i += 97) gap = std::max(gap, std::abs(f.eval(static_cast<double>(i) / steps) - ref[i]));
  gap = std::max(gap, std::abs(f.eval(1.0) - ref[steps]));
  EXPECT_LE(gap, 1e-4);
}

TEST(ApplyFInverse, Examples) {
  const CadlagPath f = CadlagPath::from_function([](double t) { return t; }, 1.0 / 4096, {{0.5, 1.0}});
  const CadlagPath g = apply_F_inverse(drift_const(1.0), f);
  EXPECT_LE(uniform_distance(g, indicator(0.5)), 1e-12);
  EXPECT_EQ(apply_F_inverse(drift_zero(), f), f);
}

TEST(ApplyFInverse, RoundTripOnRandomStepPaths) {
  std::mt19937_64 gen(21);
  const SolverConfig cfg;
  for (const auto& d : registry()) {
    for (int i = 0; i < 100; ++i) {
      const CadlagPath g = random_step(gen);
      const CadlagPath back = apply_F_inverse(d, apply_F(d, g, cfg), cfg);
      EXPECT_LE(uniform_distance(back, g), 10.0 * cfg.picard_tol) << d.name;
    }
  }
}

TEST(ApplyF, PreservesJumpRegistry) {
  std::mt19937_64 gen(22);
  for (const auto& d : registry()) {
    for (int i = 0; i < 100; ++i) {
      const CadlagPath g = random_step(gen);
      const CadlagPath f = apply_F(d, g);
      ASSERT_EQ(f.jumps().size(), g.jumps().size());
      for (std::size_t k = 0; k < g.jumps().size(); ++k) EXPECT_EQ(f.jumps()[k], g.jumps()[k]);
      const CadlagPath back = apply_F_inverse(d, f);
      ASSERT_EQ(back.jumps().size(), g.jumps().size());
      for (std::size_t k = 0; k < g.jumps().size(); ++k) EXPECT_EQ(back.jumps()[k], g.jumps()[k]);
    }
  }
}

TEST(ApplyF, ResidualIsWithinTolerance) {
  std::mt19937_64 gen(23);
  const DriftSpec d = drift_cos_scaled(0.2);
  for (int i = 0; i < 20; ++i) {
    const CadlagPath g = random_step(gen);
    EXPECT_LE(solution_residual(d, apply_F(d, g), g), 1e-8);
  }
}

TEST(ApplyF, GronwallBound) {
  std::mt19937_64 gen(24);
  for (const auto& d : registry()) {
    for (int i = 0; i < 100; ++i) {
      const CadlagPath g1 = random_step(gen), g2 = random_step(gen);
      const double lhs = uniform_distance(apply_F(d, g1), apply_F(d, g2));
      EXPECT_LE(lhs, std::exp(d.lipschitz_L) * uniform_distance(g1, g2) * 1.01) << d.name;
    }
  }
}

TEST(ApplyFInverse, OnePlusLipschitz) {
  std::mt19937_64 gen(25);
  std::uniform_real_distribution<double> a(-1.0, 1.0);
  for (const auto& d : registry()) {
    for (int i = 0; i < 50; ++i) {
      const double p = a(gen), q = a(gen);
      const CadlagPath f1 = CadlagPath::from_function([&](double t) { return p * std::sin(4 * t); },
                                                      1.0 / 256, {{0.3, 2.0 * p}});
      const CadlagPath f2 = CadlagPath::from_function([&](double t) { return q * t; }, 1.0 / 256,
                                                      {{0.6, q}});
      const double lhs = uniform_distance(apply_F_inverse(d, f1), apply_F_inverse(d, f2));
      EXPECT_LE(lhs, (1.0 + d.lipschitz_L) * uniform_distance(f1, f2) + 1e-12) << d.name;
    }
  }
}

TEST(ApplyF, ThrowsWhenCorrectorCannotConverge) {
  SolverConfig cfg;
  cfg.scheme = Scheme::euler;
  cfg.step = 1.0 / 16;
  cfg.picard_tol = 1e-15;
  cfg.picard_max_iter = 0;
  try {
    apply_F(drift_cos_scaled(0.9), indicator(0.5), cfg);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.residual(), cfg.picard_tol);
  }
}

TEST(Euler, ZeroDriftReproducesNoise) {
  const TailModel m = stable_preset(1.5);
  SimConfig cfg;
  cfg.epsilon = 0.1;
  cfg.grid_delta = 1.0 / 256;
  for (std::uint64_t s = 0; s < 20; ++s) {
    cfg.stream_id = s;
    const CadlagPath noise = sample_scaled_path(m, cfg);
    const CadlagPath y = euler_solve_sde(drift_zero(), noise, cfg.grid_delta);
    EXPECT_EQ(uniform_distance(y, noise), 0.0);
    for (const auto& j : noise.jumps()) EXPECT_EQ(y.eval(j.time), noise.eval(j.time));
  }
}

TEST(Euler, ConstantDriftEndpoint) {
  const CadlagPath y = euler_solve_sde(drift_const(0.5), CadlagPath::zero(), 1.0 / 1024);
  EXPECT_NEAR(y.eval(1.0), 0.5, 1e-12);
}

TEST(Euler, AgreesWithSolutionMapToFirstOrder) {
  const TailModel m = stable_preset(1.5);
  const DriftSpec d = drift_cos_scaled(0.2);
  SimConfig cfg;
  cfg.epsilon = 0.1;
  cfg.grid_delta = 1.0 / 256;
  SolverConfig ref;
  ref.step = 1.0 / 65536;
  double worst_coarse = 0.0, worst_fine = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    cfg.stream_id = s;
    const CadlagPath noise = sample_scaled_path(m, cfg);
    const CadlagPath f = apply_F(d, noise, ref);
    worst_coarse = std::max(worst_coarse, uniform_distance(euler_solve_sde(d, noise, 1.0 / 256), f));
    worst_fine = std::max(worst_fine, uniform_distance(euler_solve_sde(d, noise, 1.0 / 4096), f));
  }
  RecordProperty("euler_constant_coarse", std::to_string(worst_coarse * 256));
  RecordProperty("euler_constant_fine", std::to_string(worst_fine * 4096));
  // First order: a 16x finer step shrinks the gap by well over 4x.
  EXPECT_LE(worst_coarse, 1e-3);
  EXPECT_LE(worst_fine, worst_coarse / 4.0);
}

TEST(Drift, RegistryAndCustomChecks) {
  for (const auto& n : drift_names()) EXPECT_NO_THROW(make_drift(n, 0.2));
  EXPECT_THROW(make_drift("nope", 1.0), DomainError);
  EXPECT_TRUE(drift_zero().zero);
  EXPECT_NEAR(make_drift("cos_scaled", 0.2)(0.0), 0.2, 1e-15);
  EXPECT_NO_THROW(custom_drift("sin", [](double y) { return 0.3 * std::sin(y); }, 0.3, 0.3));
  EXPECT_THROW(custom_drift("sin", [](double y) { return 0.3 * std::sin(y); }, 0.1, 0.3), DomainError);
  EXPECT_THROW(custom_drift("sin", [](double y) { return 0.3 * std::sin(4 * y); }, 0.3, 0.3), DomainError);
  EXPECT_THROW(custom_drift("lin", [](double y) { return y; }, 10.0, 1.0), DomainError);
}
