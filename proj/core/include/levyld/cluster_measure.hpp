#pragma once

#include <cstdint>

#include "levyld/cadlag.hpp"
#include "levyld/rng.hpp"
#include "levyld/set_oracle.hpp"
#include "levyld/solution_map.hpp"
#include "levyld/stats.hpp"

namespace levyld {

/// Sampling plan for C_{j,k}: sizes are drawn conditioned on exceeding the
/// floors and reweighted by floor_up^-alpha*j * floor_down^-beta*k.
struct ClusterSampleSpec {
  int j = 0;
  int k = 0;
  double floor_up = 1.0;
  double floor_down = 1.0;
  std::uint64_t n_samples = 100000;
  std::uint64_t seed = 0;
  double alpha = 1.5;
  double beta = 1.5;
  int threads = 1;

  void validate() const;
  double mass_factor() const;
};

struct MeasureEstimate {
  double value = 0.0;
  double std_error = 0.0;
  Interval ci95;
  /// An accepted sample had a jump within 10% above its floor.
  bool floor_leakage_flag = false;
  std::uint64_t n = 0;
  std::uint64_t hits = 0;
  std::uint64_t solver_failures = 0;
  double mass_factor = 1.0;
};

/// Estimates for the interior and the closure of a set, from shared samples.
struct MeasureBracket {
  MeasureEstimate inner;
  MeasureEstimate outer;
};

/// A step path with j upward and k downward jumps at uniform times.
CadlagPath sample_djk_path(const ClusterSampleSpec& spec, Rng& rng);

/// C_{j,k}(A) for a set of step paths.
MeasureEstimate estimate_Cjk(const SetOracle::Predicate& A, const ClusterSampleSpec& spec);
MeasureBracket estimate_Cjk(const SetOracle& A, const ClusterSampleSpec& spec);

/// C_{j,k}(F^{-1}(A)): samples are pushed through apply_F before the
/// membership test. More than 0.1% solver failures throws ConvergenceError.
MeasureEstimate estimate_Cjk_tilde(const SetOracle::Predicate& A, const DriftSpec& drift,
                                   const ClusterSampleSpec& spec, const SolverConfig& solver = {});
MeasureBracket estimate_Cjk_tilde(const SetOracle& A, const DriftSpec& drift,
                                  const ClusterSampleSpec& spec, const SolverConfig& solver = {});

}  // namespace levyld
