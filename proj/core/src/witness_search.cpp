#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "levyld/error.hpp"
#include "levyld/rate.hpp"
#include "levyld/rng.hpp"

namespace levyld {

namespace {

constexpr double kPenalty = 1e6;

double score_of(const SetOracle& A, const CadlagPath& x) {
  if (A.score) return A.score(x);
  return A.contains_inner(x) ? 1.0 : -1.0;
}

// Parameters: j+k logits of the jump times, then j+k log-magnitudes.
std::optional<CadlagPath> decode(const gsl_vector* v, int j, int k) {
  const int m = j + k;
  std::vector<JumpEvent> jumps(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double th = std::clamp(gsl_vector_get(v, static_cast<std::size_t>(i)), -30.0, 30.0);
    const double ls =
        std::clamp(gsl_vector_get(v, static_cast<std::size_t>(m + i)), -20.0, 6.0);
    const double mag = std::exp(ls);
    jumps[static_cast<std::size_t>(i)] = {1.0 / (1.0 + std::exp(-th)), i < j ? mag : -mag};
  }
  std::sort(jumps.begin(), jumps.end(),
            [](const JumpEvent& a, const JumpEvent& b) { return a.time < b.time; });
  for (std::size_t i = 1; i < jumps.size(); ++i)
    if (jumps[i].time == jumps[i - 1].time) return std::nullopt;
  return CadlagPath::step(std::move(jumps));
}

struct SearchState {
  const SetOracle* A;
  const DriftSpec* drift;
  const SearchConfig* cfg;
  int j;
  int k;
  int evals = 0;
  std::optional<CadlagPath> witness;
};

double objective(const gsl_vector* v, void* params) {
  auto& s = *static_cast<SearchState*>(params);
  ++s.evals;
  if (s.witness) return -kPenalty;
  auto eta = decode(v, s.j, s.k);
  if (!eta) return kPenalty;
  try {
    SolverConfig coarse = s.cfg->solver;
    coarse.step = s.cfg->coarse_step;
    const double sc = score_of(*s.A, apply_F(*s.drift, *eta, coarse));
    if (sc > 0.0) {
      const CadlagPath image = apply_F(*s.drift, *eta, s.cfg->solver);
      if (s.A->contains_inner(image)) s.witness = std::move(eta);
    }
    return std::isfinite(sc) ? -sc : kPenalty;
  } catch (const ConvergenceError&) {
    return kPenalty;
  }
}

}  // namespace

Feasibility find_witness(const SetOracle& A, const DriftSpec& drift, int j, int k,
                         const SearchConfig& cfg) {
  if (j < 0 || k < 0) throw DomainError("jump counts must be non-negative");
  if (j + k == 0) {
    const CadlagPath zero = CadlagPath::zero();
    if (A.contains_inner(apply_F(drift, zero, cfg.solver)))
      return {Verdict::feasible, zero};
    return {Verdict::infeasible, std::nullopt};
  }
  static const bool handler_off = (gsl_set_error_handler_off(), true);
  (void)handler_off;
  const auto n = static_cast<std::size_t>(2 * (j + k));
  SearchState state{&A, &drift, &cfg, j, k, 0, std::nullopt};
  gsl_multimin_function fn{&objective, n, &state};

  std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> solver(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n),
      &gsl_multimin_fminimizer_free);
  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_alloc(n), &gsl_vector_free);
  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> steps(gsl_vector_alloc(n),
                                                                &gsl_vector_free);
  gsl_vector_set_all(steps.get(), 0.5);

  Rng rng = make_rng(cfg.seed, (static_cast<std::uint64_t>(j) << 32) | static_cast<std::uint64_t>(k));
  std::uniform_real_distribution<double> log_size(std::log(0.05), std::log(5.0));
  const int m = j + k;
  for (int start = 0; start < cfg.multistarts && !state.witness; ++start) {
    for (int i = 0; i < m; ++i) {
      const double u = uniform_open_closed(rng) * 0.98 + 0.01;
      gsl_vector_set(x.get(), static_cast<std::size_t>(i), std::log(u / (1.0 - u)));
      gsl_vector_set(x.get(), static_cast<std::size_t>(m + i), log_size(rng));
    }
    state.evals = 0;
    gsl_multimin_fminimizer_set(solver.get(), &fn, x.get(), steps.get());
    while (state.evals < cfg.max_evals && !state.witness) {
      if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
      if (gsl_multimin_fminimizer_size(solver.get()) < 1e-10) break;
    }
  }
  if (state.witness) return {Verdict::feasible, std::move(state.witness)};
  return {Verdict::unknown, std::nullopt};
}

FeasibilityOracle search_oracle(const SetOracle& A, const DriftSpec& drift,
                                const SearchConfig& cfg) {
  return [A, drift, cfg](int j, int k) { return find_witness(A, drift, j, k, cfg); };
}

FeasibilityOracle witness_list_oracle(const SetOracle& A, const DriftSpec& drift,
                                      std::vector<CadlagPath> witnesses,
                                      const SolverConfig& solver) {
  return [A, drift, witnesses = std::move(witnesses), solver](int j, int k) -> Feasibility {
    for (const auto& w : witnesses) {
      if (!w.is_step()) continue;
      const JumpProfile p = jump_counts(w);
      if (p.up_count != j || p.down_count != k) continue;
      if (A.contains_inner(apply_F(drift, w, solver))) return {Verdict::feasible, w};
    }
    return {Verdict::unknown, std::nullopt};
  };
}

}  // namespace levyld
