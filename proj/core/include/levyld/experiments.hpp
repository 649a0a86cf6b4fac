#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "levyld/cluster_measure.hpp"
#include "levyld/config.hpp"
#include "levyld/levy_model.hpp"
#include "levyld/rate.hpp"
#include "levyld/set_oracle.hpp"
#include "levyld/solution_map.hpp"
#include "levyld/stats.hpp"

namespace levyld {

inline constexpr int kSchemaVersion = 1;

struct ExperimentConfig {
  TailModel model;
  SimConfig sim;
  DriftSpec drift = drift_zero();
  SetOracle set = set_whole();
  std::vector<double> epsilons;
  std::vector<std::uint64_t> n_samples;  // one per epsilon
  std::uint64_t seed = 0;
  int threads = 0;
  SolverConfig solver;
  SearchConfig search;
  double cost_bound = 4.0;

  /// Every `audit_stride`-th path is re-solved with apply_F.
  std::uint64_t audit_stride = 100;
  double audit_tol = 1e-3;

  double slope_tolerance = 0.15;
  std::uint64_t min_hits = 30;

  double ratio_threshold = 0.1;
  /// Pair whose cost bounds the argmin scan; also the normaliser when the
  /// argmin is empty.
  std::optional<StepClass> ratio_bound;
  std::uint64_t cjk_samples = 1000000;
  double cjk_floor_up = 0.0;  // 0: half the declared margin
  double cjk_floor_down = 0.0;

  std::filesystem::path out_dir = ".";
  /// Raw key/value pairs, echoed into result files.
  Config source;

  void validate() const;
};

/// Builds the experiment from a parsed config. Throws ConfigError on missing
/// or malformed keys.
ExperimentConfig experiment_from_config(const Config& cfg);
TailModel model_from_config(const Config& cfg);
DriftSpec drift_from_config(const Config& cfg);
SetOracle set_from_config(const Config& cfg);
SolverConfig solver_from_config(const Config& cfg);

struct ProbabilityEstimate {
  double eps = 0.0;
  std::uint64_t n = 0;
  std::uint64_t hits_inner = 0;
  std::uint64_t hits_outer = 0;
  std::uint64_t out_of_ball = 0;
  std::uint64_t audited = 0;
  std::uint64_t audit_disagreements = 0;
  double audit_max_gap = 0.0;

  double p_inner() const { return n ? static_cast<double>(hits_inner) / static_cast<double>(n) : 0.0; }
  double p_outer() const { return n ? static_cast<double>(hits_outer) / static_cast<double>(n) : 0.0; }
  Interval ci_inner() const { return wilson_interval(hits_inner, n); }
  Interval ci_outer() const { return wilson_interval(hits_outer, n); }
};

/// P(Y^eps in A) by Monte Carlo: Euler on every path, apply_F on an audit
/// subsample. Throws IntegratorError when more than 0.5% of audited paths
/// disagree by more than audit_tol in sup norm.
ProbabilityEstimate estimate_probability(const ExperimentConfig& cfg, const SetOracle& A,
                                         double eps, std::uint64_t n);

struct SlopePoint {
  ProbabilityEstimate est;
  bool in_fit = false;
};

struct SlopeResult {
  std::vector<SlopePoint> points;
  std::optional<LinearFit> fit;
  Interval slope_ci;
  InfRate theory;
  double theory_slope = 0.0;
  bool pass = false;
  std::string message;
};

SlopeResult run_slope_experiment(const ExperimentConfig& cfg);

struct RatioPoint {
  ProbabilityEstimate est;
  double normalizer = 0.0;
  double ratio = 0.0;
  Interval ratio_ci;
};

struct RatioResult {
  std::vector<RatioPoint> points;
  ArgminResult argmin;
  /// Pair used for the normaliser.
  int J = 0;
  int K = 0;
  bool vanishing_branch = false;
  std::optional<MeasureBracket> bracket;
  ClusterSampleSpec cluster_spec;
  /// "decreasing", "increasing" or "mixed" over the last three points.
  std::string trend;
  bool pass = false;
  std::string message;
};

/// (n nu[n, inf))^J (n nu(-inf, -n])^K with n = 1/eps.
double ratio_normalizer(const TailModel& model, double eps, int J, int K);

RatioResult run_ratio_experiment(const ExperimentConfig& cfg);

/// slope.csv, slope.json, slope.gp in cfg.out_dir.
void write_slope_outputs(const ExperimentConfig& cfg, const SlopeResult& r);
/// ratio.csv, ratio.json, ratio.gp in cfg.out_dir.
void write_ratio_outputs(const ExperimentConfig& cfg, const RatioResult& r);

std::string slope_json(const ExperimentConfig& cfg, const SlopeResult& r);
std::string ratio_json(const ExperimentConfig& cfg, const RatioResult& r);

}  // namespace levyld
