#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levyld/cadlag.hpp"
#include "levyld/set_oracle.hpp"
#include "levyld/solution_map.hpp"

namespace levyld {

inline constexpr double kDefaultTolStep = 1e-6;

struct JumpProfile {
  int up_count = 0;
  int down_count = 0;
  friend bool operator==(const JumpProfile&, const JumpProfile&) = default;
};

/// Registry jumps with size > eta (up) and size < -eta (down).
JumpProfile jump_counts(const CadlagPath& path, double eta = 0.0);

/// (alpha-1) up + (beta-1) down for step paths vanishing at 0, +inf otherwise.
/// A path counts as a step path when its continuous part oscillates by at
/// most tol_step and |path(0)| <= tol_step.
double rate_I(const CadlagPath& path, double alpha, double beta,
              double tol_step = kDefaultTolStep, double eta = 0.0);

/// rate_I of F^{-1}(path).
double rate_I_tilde(const CadlagPath& path, const DriftSpec& drift, double alpha, double beta,
                    const SolverConfig& cfg = {}, double tol_step = kDefaultTolStep,
                    double eta = 0.0);

/// (alpha-1) j + (beta-1) k
double cost_jk(int j, int k, double alpha, double beta);

struct CostPair {
  int j = 0;
  int k = 0;
  double cost = 0.0;
  /// Index of the distinct cost value; equal levels are ties.
  int level = 0;
};

/// All (j, k) with cost <= cost_bound in increasing cost. Pairs of equal cost
/// share a level and are listed by increasing k.
std::vector<CostPair> enumerate_cost_order(double alpha, double beta, double cost_bound);

enum class Verdict { feasible, infeasible, unknown };
std::string to_string(Verdict v);

/// Outcome of asking whether F(D_{j,k}) meets A. A feasible verdict carries
/// a step-path witness eta in D_{j,k} with F(eta) in A.
struct Feasibility {
  Verdict verdict = Verdict::unknown;
  std::optional<CadlagPath> witness;
};

using FeasibilityOracle = std::function<Feasibility(int j, int k)>;

struct ArgminResult {
  /// False when no pair within the bound was shown feasible.
  bool found = false;
  double cost = 0.0;
  std::vector<CostPair> pairs;
  std::vector<CadlagPath> witnesses;
  /// Pairs at or below the reported level whose verdict stayed unknown.
  std::vector<CostPair> unresolved;
  std::string message;
};

/// Scans pairs in cost order and returns every feasible pair at the first
/// cost level that has one.
ArgminResult argmin_jk(const FeasibilityOracle& oracle, double alpha, double beta,
                       double cost_bound);

struct SearchConfig {
  int multistarts = 64;
  int max_evals = 1000;
  /// Solver step used inside the optimiser; candidates are re-checked at
  /// solver.step before being accepted.
  double coarse_step = 1.0 / 256.0;
  SolverConfig solver;
  std::uint64_t seed = 0;
};

/// Multistart Nelder-Mead over jump times and sizes of eta in D_{j,k},
/// maximising A.score(F(eta)). (0,0) is decided exactly; otherwise a failed
/// search yields Verdict::unknown.
Feasibility find_witness(const SetOracle& A, const DriftSpec& drift, int j, int k,
                         const SearchConfig& cfg);

FeasibilityOracle search_oracle(const SetOracle& A, const DriftSpec& drift,
                                const SearchConfig& cfg);

/// Oracle backed by caller-supplied step paths: (j, k) is feasible when one
/// of them has that jump profile and its image lies in A; unknown otherwise.
FeasibilityOracle witness_list_oracle(const SetOracle& A, const DriftSpec& drift,
                                      std::vector<CadlagPath> witnesses,
                                      const SolverConfig& solver = {});

/// pi(x): (largest upward jump, largest downward jump magnitude).
std::pair<double, double> largest_jumps_pi(const CadlagPath& path);

/// (alpha-1) 1{y1 > 0} + (beta-1) 1{y2 > 0}
double rate_pi_induced(std::pair<double, double> y, double alpha, double beta);

struct InfRate {
  /// +inf when nothing was found within the bound.
  double value = 0.0;
  bool found = false;
  double cost_bound = 0.0;
  int j = 0;
  int k = 0;
  std::optional<CadlagPath> witness;
};

InfRate inf_rate_over_set(const SetOracle& A, const DriftSpec& drift, double alpha, double beta,
                          const SearchConfig& cfg, double cost_bound = 4.0);

}  // namespace levyld
