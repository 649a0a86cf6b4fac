#include "levyld/levy_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/random/normal_distribution.hpp>

#include "levyld/error.hpp"

namespace levyld {

namespace {

struct Side {
  double index;
  double c;
  const SlowlyVarying& L;
  double onset;

  // Smallest truncation at which sampling is exact: at or beyond the onset and
  // inside the region where L is constant.
  double min_tau() const { return std::max(onset, L.constant_beyond); }

  double tail(double x) const {
    if (c == 0.0) return 0.0;
    const double xe = std::max(x, onset);
    return c * L(xe) * std::pow(xe, -index);
  }

  // int_{z > tau} z nu(dz)
  double first_moment_above(double tau) const {
    if (c == 0.0) return 0.0;
    return c * L(tau) * index * std::pow(tau, 1.0 - index) / (index - 1.0);
  }

  // int_{onset < z <= tau} z^2 nu(dz), with L frozen at its value at tau.
  double second_moment_below(double tau) const {
    if (c == 0.0 || tau <= onset) return 0.0;
    const double k = c * L(tau) * index;
    if (index == 2.0) return k * std::log(tau / onset);
    const double lower = onset > 0.0 ? std::pow(onset, 2.0 - index) : 0.0;
    return k * (std::pow(tau, 2.0 - index) - lower) / (2.0 - index);
  }
};

Side up_side(const TailModel& m) { return {m.alpha, m.c_plus, m.L_plus, m.onset_plus}; }
Side down_side(const TailModel& m) { return {m.beta, m.c_minus, m.L_minus, m.onset_minus}; }

void check_constant_beyond(const SlowlyVarying& L, const char* which) {
  if (L.is_constant()) return;
  const double x0 = std::max(L.constant_beyond, 1e-12);
  const double ref = L(x0);
  if (!(ref > 0.0) || !std::isfinite(ref))
    throw DomainError(std::string("slowly varying factor ") + which + " must be positive");
  for (int k = 1; k <= 30; ++k) {
    const double v = L(x0 * std::ldexp(1.0, k));
    if (std::abs(v - ref) > 1e-12 * std::abs(ref))
      throw DomainError(std::string("slowly varying factor ") + which +
                        " is not constant beyond its declared x*");
  }
}

// Bisection in log(tau) for the point where a monotone function crosses target.
template <class F>
double solve_log(F f, double target, bool increasing) {
  double lo = -40.0;
  double hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool above = f(std::exp(mid)) > target;
    if (above == increasing)
      hi = mid;
    else
      lo = mid;
  }
  return std::exp(increasing ? lo : hi);
}

}  // namespace

void TailModel::validate() const {
  if (!(alpha > 1.0) || !(beta > 1.0)) throw DomainError("tail indices must exceed 1");
  if (!(c_plus >= 0.0) || !(c_minus >= 0.0) || !std::isfinite(c_plus) || !std::isfinite(c_minus))
    throw DomainError("tail constants must be finite and non-negative");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be non-negative");
  if (!(onset_plus >= 0.0) || !(onset_minus >= 0.0))
    throw DomainError("tail onsets must be non-negative");
  if (c_plus > 0.0 && alpha >= 2.0 && onset_plus <= 0.0)
    throw DomainError("upward index >= 2 needs a positive onset_plus");
  if (c_minus > 0.0 && beta >= 2.0 && onset_minus <= 0.0)
    throw DomainError("downward index >= 2 needs a positive onset_minus");
  check_constant_beyond(L_plus, "L_plus");
  check_constant_beyond(L_minus, "L_minus");
}

double tail_upper(const TailModel& model, double x) {
  if (!(x > 0.0)) throw DomainError("tail argument must be positive");
  return up_side(model).tail(x);
}

double tail_lower(const TailModel& model, double x) {
  if (!(x > 0.0)) throw DomainError("tail argument must be positive");
  return down_side(model).tail(x);
}

double sample_jump_size(const TailModel& model, JumpSide side, double floor, double u) {
  if (!(floor > 0.0)) throw DomainError("jump-size floor must be positive");
  if (!(u > 0.0 && u <= 1.0)) throw DomainError("uniform variate must lie in (0, 1]");
  const double index = side == JumpSide::up ? model.alpha : model.beta;
  return floor * std::pow(u, -1.0 / index);
}

TruncationPlan plan_truncation(const TailModel& model, const SimConfig& cfg) {
  model.validate();
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0)) throw DomainError("epsilon must lie in (0, 1]");
  if (!(cfg.trunc_tau >= 0.0)) throw DomainError("truncation must be non-negative");
  if (!(cfg.jump_budget > 0.0)) throw DomainError("jump budget must be positive");
  const Side up = up_side(model);
  const Side down = down_side(model);
  const double eps = cfg.epsilon;

  auto expected_count = [&](double tau) {
    return (up.tail(std::max(tau, up.min_tau())) + down.tail(std::max(tau, down.min_tau()))) /
           eps;
  };
  auto small_variance = [&](double tau) {
    return eps * (up.second_moment_below(std::max(tau, up.min_tau())) +
                  down.second_moment_below(std::max(tau, down.min_tau())));
  };

  double tau = cfg.trunc_tau;
  if (tau == 0.0) {
    const double tau_budget = expected_count(1e-300) <= cfg.jump_budget
                                  ? 0.0
                                  : solve_log(expected_count, cfg.jump_budget, false);
    const double tau_var = solve_log(small_variance, 1e-4, true);
    tau = std::max(tau_budget, tau_var);
  }

  TruncationPlan plan;
  plan.tau_up = std::max(tau, up.min_tau());
  plan.tau_down = std::max(tau, down.min_tau());
  plan.rate_up = up.tail(plan.tau_up) / eps;
  plan.rate_down = down.tail(plan.tau_down) / eps;
  if (plan.rate_up + plan.rate_down > kMaxExpectedJumps)
    throw DomainError("truncation too small: " + std::to_string(plan.rate_up + plan.rate_down) +
                      " expected jumps per path");
  plan.compensator_slope =
      -(up.first_moment_above(plan.tau_up) - down.first_moment_above(plan.tau_down));
  plan.smalljump_variance =
      eps * (up.second_moment_below(plan.tau_up) + down.second_moment_below(plan.tau_down));
  plan.brownian_variance = model.sigma * model.sigma * eps +
                           (cfg.gaussian_smalljump ? plan.smalljump_variance : 0.0);
  return plan;
}

CadlagPath sample_scaled_path(const TailModel& model, const SimConfig& cfg) {
  const TruncationPlan plan = plan_truncation(model, cfg);
  Rng rng = make_rng(cfg.seed, cfg.stream_id);
  return sample_scaled_path(model, cfg, plan, rng);
}

CadlagPath sample_scaled_path(const TailModel& model, const SimConfig& cfg,
                              const TruncationPlan& plan, Rng& rng) {
  const double eps = cfg.epsilon;
  const auto n = static_cast<std::size_t>(std::llround(1.0 / cfg.grid_delta));
  if (n == 0) throw DomainError("grid step must lie in (0, 1]");

  auto draw_count = [&rng](double mean) -> std::size_t {
    if (mean <= 0.0) return 0;
    return static_cast<std::size_t>(std::poisson_distribution<long long>(mean)(rng));
  };
  const std::size_t n_up = draw_count(plan.rate_up);
  const std::size_t n_down = draw_count(plan.rate_down);

  std::vector<JumpEvent> jumps(n_up + n_down);
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const bool is_up = i < n_up;
    const double t = uniform_open_closed(rng);
    const double u = uniform_open_closed(rng);
    const double z = is_up ? sample_jump_size(model, JumpSide::up, plan.tau_up, u)
                           : sample_jump_size(model, JumpSide::down, plan.tau_down, u);
    jumps[i] = {t, is_up ? eps * z : -eps * z};
  }
  // Coinciding times have probability zero; redraw to keep the law.
  auto by_time = [](const JumpEvent& a, const JumpEvent& b) { return a.time < b.time; };
  std::sort(jumps.begin(), jumps.end(), by_time);
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t i = 1; i < jumps.size(); ++i) {
      if (jumps[i].time == jumps[i - 1].time) {
        jumps[i].time = uniform_open_closed(rng);
        clash = true;
      }
    }
    if (clash) std::sort(jumps.begin(), jumps.end(), by_time);
  }

  std::vector<double> grid(n + 1, 0.0);
  const double dt = 1.0 / static_cast<double>(n);
  if (plan.brownian_variance > 0.0) {
    const double sd = std::sqrt(plan.brownian_variance * dt);
    boost::random::normal_distribution<double> normal(0.0, 1.0);  // ziggurat
    double w = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      w += sd * normal(rng);
      grid[i] = w;
    }
  }
  if (plan.compensator_slope != 0.0)
    for (std::size_t i = 1; i <= n; ++i)
      grid[i] += plan.compensator_slope * (i == n ? 1.0 : static_cast<double>(i) * dt);

  return CadlagPath(0.0, dt, std::move(grid), std::move(jumps));
}

TailModel stable_preset(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw DomainError("stable preset needs 1 < alpha < 2");
  TailModel m;
  m.alpha = alpha;
  m.beta = alpha;
  m.c_plus = 1.0 / alpha;
  m.c_minus = 1.0 / alpha;
  m.sigma = 0.0;
  return m;
}

}  // namespace levyld
