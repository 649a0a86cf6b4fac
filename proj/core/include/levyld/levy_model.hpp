#pragma once

#include <cstdint>
#include <functional>

#include "levyld/cadlag.hpp"
#include "levyld/rng.hpp"

namespace levyld {

/// Slowly varying factor L(x) of a tail. Empty `fn` means L == 1. Samplers
/// require L to be constant on [constant_beyond, inf).
struct SlowlyVarying {
  std::function<double(double)> fn;
  double constant_beyond = 0.0;

  double operator()(double x) const { return fn ? fn(x) : 1.0; }
  bool is_constant() const { return !fn; }
};

/// Regularly varying Levy measure:
///   nu([x, inf))   = c_plus  * L_plus(x)  * x^-alpha
///   nu((-inf, -x]) = c_minus * L_minus(x) * x^-beta
/// for x >= onset of the side. A side with index >= 2 is only a tail model;
/// it needs a positive onset below which that side carries no mass.
struct TailModel {
  double alpha = 1.5;
  double beta = 1.5;
  double c_plus = 1.0;
  double c_minus = 1.0;
  SlowlyVarying L_plus;
  SlowlyVarying L_minus;
  double sigma = 0.0;  // Brownian coefficient
  double onset_plus = 0.0;
  double onset_minus = 0.0;

  /// Throws DomainError when an invariant fails.
  void validate() const;
};

/// nu([x, inf)); DomainError for x <= 0.
double tail_upper(const TailModel& model, double x);
/// nu((-inf, -x]); DomainError for x <= 0.
double tail_lower(const TailModel& model, double x);

enum class JumpSide { up, down };

/// Inverse-CDF draw from the tail conditioned on size >= floor:
/// floor * u^(-1/index). u in (0, 1].
double sample_jump_size(const TailModel& model, JumpSide side, double floor, double u);

struct SimConfig {
  double epsilon = 0.1;
  /// Small-jump truncation in z-space; 0 selects it automatically.
  double trunc_tau = 0.0;
  bool gaussian_smalljump = true;
  double grid_delta = kDefaultGridDelta;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  /// Expected number of simulated jumps used by the automatic truncation.
  double jump_budget = 64.0;
};

/// How a SimConfig is realised for a given model.
struct TruncationPlan {
  double tau_up = 1.0;    // z-space truncation of the upward side
  double tau_down = 1.0;  // z-space truncation of the downward side
  double rate_up = 0.0;   // expected upward jump count of eps*L^eps
  double rate_down = 0.0;
  double compensator_slope = 0.0;    // continuous part gets slope * t
  double smalljump_variance = 0.0;   // eps * int_{small} z^2 nu(dz)
  double brownian_variance = 0.0;    // per unit time, sigma^2 eps (+ small jumps)
};

inline constexpr double kMaxExpectedJumps = 1e8;

/// Resolves the truncation and the continuous-part coefficients. Throws
/// DomainError ("truncation too small") when more than 1e8 jumps are expected.
TruncationPlan plan_truncation(const TailModel& model, const SimConfig& cfg);

/// One sample of eps*L^eps on [0, 1]: compound-Poisson large jumps at uniform
/// times, compensator drift, Brownian part (with the Gaussian small-jump
/// substitute when enabled). Seeded from (cfg.seed, cfg.stream_id).
CadlagPath sample_scaled_path(const TailModel& model, const SimConfig& cfg);
/// Same, drawing from a caller-owned engine with a precomputed plan.
CadlagPath sample_scaled_path(const TailModel& model, const SimConfig& cfg,
                              const TruncationPlan& plan, Rng& rng);

/// Symmetric alpha-stable measure nu(dz) = |z|^(-1-alpha) dz, 1 < alpha < 2.
TailModel stable_preset(double alpha);

}  // namespace levyld
