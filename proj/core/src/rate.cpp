#include "levyld/rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "levyld/error.hpp"

namespace levyld {

namespace {

void check_indices(double alpha, double beta) {
  if (!(alpha > 1.0) || !(beta > 1.0)) throw DomainError("tail indices must exceed 1");
}

}  // namespace

JumpProfile jump_counts(const CadlagPath& path, double eta) {
  if (!(eta >= 0.0)) throw DomainError("eta must be non-negative");
  JumpProfile p;
  for (const auto& j : path.jumps()) {
    if (j.size > eta) ++p.up_count;
    if (j.size < -eta) ++p.down_count;
  }
  return p;
}

double rate_I(const CadlagPath& path, double alpha, double beta, double tol_step, double eta) {
  check_indices(alpha, beta);
  if (path.cont_oscillation() > tol_step || std::abs(path.eval(0.0)) > tol_step)
    return std::numeric_limits<double>::infinity();
  const JumpProfile p = jump_counts(path, eta);
  return cost_jk(p.up_count, p.down_count, alpha, beta);
}

double rate_I_tilde(const CadlagPath& path, const DriftSpec& drift, double alpha, double beta,
                    const SolverConfig& cfg, double tol_step, double eta) {
  return rate_I(apply_F_inverse(drift, path, cfg), alpha, beta, tol_step, eta);
}

double cost_jk(int j, int k, double alpha, double beta) {
  if (j < 0 || k < 0) throw DomainError("jump counts must be non-negative");
  return (alpha - 1.0) * j + (beta - 1.0) * k;
}

std::vector<CostPair> enumerate_cost_order(double alpha, double beta, double cost_bound) {
  check_indices(alpha, beta);
  if (!(cost_bound >= 0.0) || !std::isfinite(cost_bound))
    throw DomainError("cost bound must be finite and non-negative");
  const double slack = 1e-12 * std::max(1.0, cost_bound);
  std::vector<CostPair> out;
  for (int j = 0; (alpha - 1.0) * j <= cost_bound + slack; ++j)
    for (int k = 0; cost_jk(j, k, alpha, beta) <= cost_bound + slack; ++k)
      out.push_back({j, k, cost_jk(j, k, alpha, beta), 0});
  std::sort(out.begin(), out.end(), [](const CostPair& a, const CostPair& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.k < b.k;
  });
  int level = 0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].cost - out[i - 1].cost > 1e-12 * std::max(1.0, out[i].cost)) ++level;
    out[i].level = level;
  }
  std::stable_sort(out.begin(), out.end(), [](const CostPair& a, const CostPair& b) {
    return a.level != b.level ? a.level < b.level : a.k < b.k;
  });
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible:
      return "feasible";
    case Verdict::infeasible:
      return "infeasible";
    case Verdict::unknown:
      break;
  }
  return "unknown";
}

ArgminResult argmin_jk(const FeasibilityOracle& oracle, double alpha, double beta,
                       double cost_bound) {
  const auto order = enumerate_cost_order(alpha, beta, cost_bound);
  ArgminResult r;
  std::size_t i = 0;
  while (i < order.size()) {
    const int level = order[i].level;
    for (; i < order.size() && order[i].level == level; ++i) {
      const CostPair& p = order[i];
      Feasibility f = oracle(p.j, p.k);
      if (f.verdict == Verdict::feasible) {
        r.pairs.push_back(p);
        if (f.witness) r.witnesses.push_back(std::move(*f.witness));
      } else if (f.verdict == Verdict::unknown) {
        r.unresolved.push_back(p);
      }
    }
    if (!r.pairs.empty()) {
      r.found = true;
      r.cost = r.pairs.front().cost;
      return r;
    }
  }
  r.message = "argmin empty within bound";
  return r;
}

std::pair<double, double> largest_jumps_pi(const CadlagPath& path) {
  return largest_jump_sizes(path);
}

double rate_pi_induced(std::pair<double, double> y, double alpha, double beta) {
  check_indices(alpha, beta);
  if (!(y.first >= 0.0) || !(y.second >= 0.0))
    throw DomainError("largest-jump components must be non-negative");
  return (alpha - 1.0) * (y.first > 0.0 ? 1.0 : 0.0) + (beta - 1.0) * (y.second > 0.0 ? 1.0 : 0.0);
}

InfRate inf_rate_over_set(const SetOracle& A, const DriftSpec& drift, double alpha, double beta,
                          const SearchConfig& cfg, double cost_bound) {
  ArgminResult am = argmin_jk(search_oracle(A, drift, cfg), alpha, beta, cost_bound);
  InfRate out;
  out.cost_bound = cost_bound;
  if (!am.found) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  out.found = true;
  out.value = am.cost;
  out.j = am.pairs.front().j;
  out.k = am.pairs.front().k;
  if (!am.witnesses.empty()) out.witness = std::move(am.witnesses.front());
  return out;
}

}  // namespace levyld
