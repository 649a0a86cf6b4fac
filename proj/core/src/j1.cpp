#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "levyld/cadlag.hpp"
#include "levyld/error.hpp"

namespace levyld {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct StepView {
  std::vector<double> times;
  std::vector<double> levels;  // levels[i] = value after i jumps
};

StepView step_view(const CadlagPath& x) {
  if (!x.has_constant_cont())
    throw DomainError("exact J1 requires piecewise-constant paths");
  StepView v;
  v.levels.push_back(x.eval(0.0));
  for (const auto& j : x.jumps()) {
    v.times.push_back(j.time);
    v.levels.push_back(v.levels.back() + j.size);
  }
  return v;
}

// best[i][j]: earliest admissible time for the i-th jump of x o lambda given
// that the merged event sequence has reached state (i, j). The discrepancy on
// every visited state must stay within r.
bool feasible(const StepView& x, const StepView& y, double r) {
  const std::size_t n = x.times.size();
  const std::size_t m = y.times.size();
  if (std::abs(x.levels[0] - y.levels[0]) > r) return false;
  std::vector<double> best((n + 1) * (m + 1), kInf);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return best[i * (m + 1) + j]; };
  at(0, 0) = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      if (std::abs(x.levels[i] - y.levels[j]) > r) continue;
      double cand = kInf;
      if (j >= 1) cand = std::min(cand, at(i, j - 1));
      if (i >= 1) {
        const double s = x.times[i - 1];
        const double prev = at(i - 1, j);
        if (prev < kInf) {
          double lo = std::max({prev, s - r, j >= 1 ? y.times[j - 1] : 0.0});
          const double hi = std::min({s + r, j < m ? y.times[j] : 1.0, 1.0});
          if (s == 1.0) lo = std::max(lo, 1.0);
          if (lo <= hi) cand = std::min(cand, lo);
        }
        if (j >= 1) {
          const double prev_diag = at(i - 1, j - 1);
          const double u = y.times[j - 1];
          if (prev_diag < kInf && u >= prev_diag && std::abs(u - s) <= r &&
              (s != 1.0 || u == 1.0))
            cand = std::min(cand, u);
        }
      }
      at(i, j) = cand;
    }
  }
  return at(n, m) < kInf;
}

// Largest-jump discrepancy: each component of (largest up, largest down)
// moves by at most twice the J1 distance.
double pi_bound(const CadlagPath& x, const CadlagPath& y) {
  auto [xu, xd] = largest_jump_sizes(x);
  auto [yu, yd] = largest_jump_sizes(y);
  return 0.5 * std::max(std::abs(xu - yu), std::abs(xd - yd));
}

double endpoint_bound(const CadlagPath& x, const CadlagPath& y) {
  return std::max(std::abs(x.eval(0.0) - y.eval(0.0)), std::abs(x.eval(1.0) - y.eval(1.0)));
}

// Range of a path over time windows, via sparse tables over its breakpoints.
class RangeQuery {
 public:
  explicit RangeQuery(const CadlagPath& x) : x_(x) {
    const CadlagPath* ps[] = {&x};
    times_ = merged_breakpoints(ps);
    const std::size_t n = times_.size();
    std::vector<double> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = x.eval(times_[i]);
      const double b = x.eval_left(times_[i]);
      lo[i] = std::min(a, b);
      hi[i] = std::max(a, b);
    }
    min_.push_back(std::move(lo));
    max_.push_back(std::move(hi));
    for (std::size_t w = 1; (std::size_t{1} << w) <= n; ++w) {
      const std::size_t len = n - (std::size_t{1} << w) + 1;
      const std::size_t half = std::size_t{1} << (w - 1);
      std::vector<double> a(len), b(len);
      for (std::size_t i = 0; i < len; ++i) {
        a[i] = std::min(min_[w - 1][i], min_[w - 1][i + half]);
        b[i] = std::max(max_[w - 1][i], max_[w - 1][i + half]);
      }
      min_.push_back(std::move(a));
      max_.push_back(std::move(b));
    }
  }

  // Closed range of x over [a, b] including left limits.
  std::pair<double, double> range(double a, double b) const {
    a = std::clamp(a, 0.0, 1.0);
    b = std::clamp(b, 0.0, 1.0);
    double lo = std::min({x_.eval(a), x_.eval_left(a), x_.eval(b), x_.eval_left(b)});
    double hi = std::max({x_.eval(a), x_.eval_left(a), x_.eval(b), x_.eval_left(b)});
    const auto first = static_cast<std::size_t>(
        std::lower_bound(times_.begin(), times_.end(), a) - times_.begin());
    const auto last = static_cast<std::size_t>(
        std::upper_bound(times_.begin(), times_.end(), b) - times_.begin());
    if (first < last) {
      const std::size_t len = last - first;
      std::size_t w = 0;
      while ((std::size_t{2} << w) <= len) ++w;
      const std::size_t second = last - (std::size_t{1} << w);
      lo = std::min({lo, min_[w][first], min_[w][second]});
      hi = std::max({hi, max_[w][first], max_[w][second]});
    }
    return {lo, hi};
  }

  const std::vector<double>& times() const { return times_; }
  const CadlagPath& path() const { return x_; }

 private:
  const CadlagPath& x_;
  std::vector<double> times_;
  std::vector<std::vector<double>> min_, max_;
};

// Necessary condition for d(x, y) < r: every value of y at time t lies
// within r of the range of x over [t - r, t + r], and vice versa.
bool window_condition(const RangeQuery& qx, const RangeQuery& qy, double r) {
  auto one_side = [r](const RangeQuery& a, const RangeQuery& b) {
    for (double t : b.times()) {
      auto [lo, hi] = a.range(t - r, t + r);
      for (double v : {b.path().eval(t), b.path().eval_left(t)}) {
        const double gap = std::max({0.0, v - hi, lo - v});
        if (gap > r) return false;
      }
    }
    return true;
  };
  return one_side(qx, qy) && one_side(qy, qx);
}

double window_lower_bound(const CadlagPath& x, const CadlagPath& y, double upper, double tol) {
  RangeQuery qx(x), qy(y);
  if (!window_condition(qx, qy, upper)) return upper;
  double lo = 0.0;
  double hi = upper;
  for (int it = 0; it < 60 && hi - lo > 0.25 * tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (window_condition(qx, qy, mid))
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

// Monotone greedy matching: earlier jumps of x first; nearest time, then
// nearest size, among same-sign jumps of y within the radius.
std::vector<TimeChange::Knot> greedy_knots(const CadlagPath& x, const CadlagPath& y,
                                           double radius) {
  std::vector<TimeChange::Knot> knots;
  const auto xj = x.jumps();
  const auto yj = y.jumps();
  std::size_t next_y = 0;
  for (const auto& a : xj) {
    std::optional<std::size_t> pick;
    for (std::size_t k = next_y; k < yj.size(); ++k) {
      const auto& b = yj[k];
      if (b.time > a.time + radius) break;
      if ((b.size > 0) != (a.size > 0) || std::abs(b.time - a.time) > radius) continue;
      if (!pick) {
        pick = k;
        continue;
      }
      const auto& c = yj[*pick];
      const double dt_b = std::abs(b.time - a.time);
      const double dt_c = std::abs(c.time - a.time);
      if (dt_b < dt_c || (dt_b == dt_c && std::abs(b.size - a.size) < std::abs(c.size - a.size)))
        pick = k;
    }
    if (!pick) continue;
    const double u = yj[*pick].time;
    next_y = *pick + 1;
    if (u >= 1.0 || a.time >= 1.0) continue;  // the end knot (1, 1) is fixed
    if (!knots.empty() && (u <= knots.back().first || a.time <= knots.back().second)) continue;
    knots.emplace_back(u, a.time);
  }
  return knots;
}

double objective(const CadlagPath& x, const CadlagPath& y,
                 const std::vector<TimeChange::Knot>& knots) {
  TimeChange lambda(knots);
  return std::max(lambda.displacement(), composed_uniform_distance(x, lambda, y));
}

double greedy_upper_bound(const CadlagPath& x, const CadlagPath& y, double start,
                          int descent_evals) {
  double best = start;
  for (int round = 0; round < 4; ++round) {
    auto knots = greedy_knots(x, y, best);
    if (knots.empty()) break;
    double val = objective(x, y, knots);
    int evals = 1;
    for (double h = 0.01; h > 1e-7 && evals < descent_evals; h *= 0.5) {
      bool moved = true;
      while (moved && evals < descent_evals) {
        moved = false;
        for (std::size_t k = 0; k < knots.size() && evals < descent_evals; ++k) {
          const double left = k == 0 ? 0.0 : knots[k - 1].first;
          const double right = k + 1 == knots.size() ? 1.0 : knots[k + 1].first;
          for (double dir : {-1.0, 1.0}) {
            const double u = knots[k].first + dir * h;
            if (!(u > left && u < right)) continue;
            auto trial = knots;
            trial[k].first = u;
            const double v = objective(x, y, trial);
            ++evals;
            if (v < val) {
              val = v;
              knots = std::move(trial);
              moved = true;
              break;
            }
          }
        }
      }
    }
    if (val < best)
      best = val;
    else
      break;
  }
  return best;
}

}  // namespace

bool j1_step_feasible(const CadlagPath& x, const CadlagPath& y, double r) {
  return feasible(step_view(x), step_view(y), r);
}

J1Bracket j1_step_exact(const CadlagPath& x, const CadlagPath& y, double tol) {
  const StepView vx = step_view(x);
  const StepView vy = step_view(y);
  double hi = uniform_distance(x, y);
  J1Bracket out;
  out.exact = true;
  if (feasible(vx, vy, 0.0)) {
    out.converged = true;
    return out;
  }
  while (!feasible(vx, vy, hi)) hi = hi * (1.0 + 1e-12) + 1e-15;
  double lo = 0.0;
  const double target = std::max(tol, 1e-13);
  for (int it = 0; it < 200 && hi - lo > target; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(vx, vy, mid))
      hi = mid;
    else
      lo = mid;
  }
  out.lower = lo;
  out.upper = hi;
  out.converged = hi - lo <= tol;
  return out;
}

J1Bracket j1_distance(const CadlagPath& x, const CadlagPath& y, const J1Options& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("J1 tolerance must be positive");
  if (x.has_constant_cont() && y.has_constant_cont())
    return j1_step_exact(x, y, std::min(opts.tol, 1e-12));

  J1Bracket out;
  const double uniform = uniform_distance(x, y);
  if (uniform == 0.0) {
    out.converged = true;
    return out;
  }
  out.upper = greedy_upper_bound(x, y, uniform, opts.descent_evals);
  const double cheap = std::max(endpoint_bound(x, y), pi_bound(x, y));
  out.lower = std::min(out.upper, cheap);
  if (out.upper - out.lower > opts.tol)
    out.lower = std::max(out.lower, window_lower_bound(x, y, out.upper, opts.tol));
  out.converged = out.upper - out.lower <= opts.tol;
  return out;
}

namespace {

std::vector<double> sorted_magnitudes(const CadlagPath& x, bool up) {
  std::vector<double> v;
  for (const auto& j : x.jumps())
    if ((j.size > 0) == up) v.push_back(std::abs(j.size));
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Step path made of the `up` largest upward and `down` largest downward jumps.
CadlagPath projection(const CadlagPath& x, int up, int down) {
  std::vector<JumpEvent> ups, downs;
  for (const auto& j : x.jumps()) (j.size > 0 ? ups : downs).push_back(j);
  auto by_size = [](const JumpEvent& a, const JumpEvent& b) {
    return std::abs(a.size) > std::abs(b.size);
  };
  std::stable_sort(ups.begin(), ups.end(), by_size);
  std::stable_sort(downs.begin(), downs.end(), by_size);
  ups.resize(std::min<std::size_t>(ups.size(), static_cast<std::size_t>(up)));
  downs.resize(std::min<std::size_t>(downs.size(), static_cast<std::size_t>(down)));
  ups.insert(ups.end(), downs.begin(), downs.end());
  return CadlagPath::step(std::move(ups));
}

// Same jump times as the projection, sizes chosen so each plateau sits at the
// mid-range of x over it. Returns nothing if a size changes sign.
std::optional<CadlagPath> level_matched(const CadlagPath& x, const CadlagPath& proj) {
  const auto pj = proj.jumps();
  if (pj.empty()) return std::nullopt;
  RangeQuery q(x);
  std::vector<JumpEvent> jumps;
  double prev_level = 0.0;
  for (std::size_t k = 0; k < pj.size(); ++k) {
    const double a = pj[k].time;
    const double b = k + 1 < pj.size() ? pj[k + 1].time : 1.0;
    auto [lo, hi] = q.range(a, b);
    // The left limit at the next jump belongs to this plateau, the value there does not.
    if (k + 1 < pj.size()) {
      auto [lo2, hi2] = q.range(a, std::nextafter(b, 0.0));
      lo = lo2;
      hi = hi2;
    }
    const double level = 0.5 * (lo + hi);
    const double size = level - prev_level;
    if (size == 0.0 || (size > 0) != (pj[k].size > 0)) return std::nullopt;
    jumps.push_back({a, size});
    prev_level = level;
  }
  return CadlagPath::step(std::move(jumps));
}

}  // namespace

J1Bracket distance_to_step_class(const CadlagPath& x, std::span<const StepClass> classes,
                                 double tol) {
  if (classes.empty()) throw DomainError("step class list is empty");
  const auto ups = sorted_magnitudes(x, true);
  const auto downs = sorted_magnitudes(x, false);
  const PathExtremes ext = extremes(x);

  J1Bracket out{kInf, kInf, false, false};
  bool all_exact = true;
  for (const auto& c : classes) {
    if (c.up < 0 || c.down < 0) throw DomainError("step class counts must be non-negative");
    double lower = 0.0;
    double upper = 0.0;
    if (c.up == 0 && c.down == 0) {
      // D_{0,0} is the zero path; lambda cannot change the sup norm.
      lower = upper = ext.sup_norm();
    } else {
      const CadlagPath proj = projection(x, c.up, c.down);
      const J1Bracket b = j1_distance(x, proj, tol);
      upper = b.upper;
      if (auto lm = level_matched(x, proj)) upper = std::min(upper, j1_distance(x, *lm, tol).upper);
      all_exact = false;
      lower = std::abs(x.eval(0.0));
      if (ups.size() > static_cast<std::size_t>(c.up))
        lower = std::max(lower, 0.5 * ups[static_cast<std::size_t>(c.up)]);
      if (downs.size() > static_cast<std::size_t>(c.down))
        lower = std::max(lower, 0.5 * downs[static_cast<std::size_t>(c.down)]);
      if (c.up == 0) lower = std::max(lower, ext.sup);     // step path stays <= 0
      if (c.down == 0) lower = std::max(lower, -ext.inf);  // step path stays >= 0
      lower = std::min(lower, upper);
    }
    out.lower = std::min(out.lower, lower);
    out.upper = std::min(out.upper, upper);
  }
  out.exact = all_exact;
  out.converged = out.upper - out.lower <= tol;
  return out;
}

}  // namespace levyld
