#include "levyld/cadlag.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levyld/error.hpp"

namespace levyld {

namespace {

bool time_less(const JumpEvent& a, double t) { return a.time < t; }
bool time_greater(double t, const JumpEvent& a) { return t < a.time; }

}  // namespace

CadlagPath::CadlagPath() = default;

CadlagPath::CadlagPath(double initial_value, double delta, std::vector<double> grid_values,
                       std::vector<JumpEvent> jumps, double jump_floor)
    : initial_value_(initial_value),
      grid_(std::move(grid_values)),
      jump_floor_(jump_floor) {
  if (!std::isfinite(initial_value)) throw DomainError("initial value is not finite");
  if (!(delta > 0.0) || delta > 1.0) throw DomainError("grid step must lie in (0, 1]");
  const double cells = std::round(1.0 / delta);
  if (std::abs(cells * delta - 1.0) > 1e-9)
    throw DomainError("grid step must divide [0, 1] evenly");
  const auto n = static_cast<std::size_t>(cells);
  if (grid_.size() != n + 1)
    throw DomainError("expected " + std::to_string(n + 1) + " grid values, got " +
                      std::to_string(grid_.size()));
  delta_ = 1.0 / cells;
  for (double v : grid_)
    if (!std::isfinite(v)) throw DomainError("grid value is not finite");
  if (!(jump_floor_ >= 0.0)) throw DomainError("jump floor must be non-negative");

  std::sort(jumps.begin(), jumps.end(),
            [](const JumpEvent& a, const JumpEvent& b) { return a.time < b.time; });
  jumps_.reserve(jumps.size());
  for (const auto& j : jumps) {
    if (!std::isfinite(j.time) || !std::isfinite(j.size))
      throw DomainError("jump is not finite");
    if (!(j.time > 0.0 && j.time <= 1.0))
      throw DomainError("jump time " + std::to_string(j.time) + " outside (0, 1]");
    if (j.size == 0.0) throw DomainError("jump size must be nonzero");
    if (!jumps_.empty() && jumps_.back().time == j.time)
      throw DomainError("two jumps share time " + std::to_string(j.time));
    if (std::abs(j.size) < jump_floor_) {
      // Fold into the continuous part: a ramp across the containing cell.
      for (std::size_t i = 0; i <= n; ++i)
        if (grid_time(i) >= j.time) grid_[i] += j.size;
      continue;
    }
    jumps_.push_back(j);
  }
  rebuild_prefix();
}

void CadlagPath::rebuild_prefix() {
  prefix_.assign(jumps_.size() + 1, 0.0);
  for (std::size_t k = 0; k < jumps_.size(); ++k) prefix_[k + 1] = prefix_[k] + jumps_[k].size;
}

CadlagPath CadlagPath::step(std::vector<JumpEvent> jumps, double initial_value) {
  return CadlagPath(initial_value, 1.0, {0.0, 0.0}, std::move(jumps));
}

CadlagPath CadlagPath::from_function(const std::function<double(double)>& cont, double delta,
                                     std::vector<JumpEvent> jumps, double initial_value) {
  if (!(delta > 0.0)) throw DomainError("grid step must be positive");
  const auto n = static_cast<std::size_t>(std::llround(1.0 / delta));
  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    grid[i] = cont(i == n ? 1.0 : static_cast<double>(i) / static_cast<double>(n));
  return CadlagPath(initial_value, delta, std::move(grid), std::move(jumps));
}

double CadlagPath::cont(double t) const {
  const std::size_t n = cells();
  const double pos = t * static_cast<double>(n);
  auto i = static_cast<std::size_t>(std::clamp(std::floor(pos), 0.0, static_cast<double>(n - 1)));
  const double w = pos - static_cast<double>(i);
  if (w == 0.0) return grid_[i];
  return grid_[i] + w * (grid_[i + 1] - grid_[i]);
}

double CadlagPath::jump_sum(double t) const {
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), t, time_greater);
  return prefix_[static_cast<std::size_t>(it - jumps_.begin())];
}

double CadlagPath::jump_sum_left(double t) const {
  auto it = std::lower_bound(jumps_.begin(), jumps_.end(), t, time_less);
  return prefix_[static_cast<std::size_t>(it - jumps_.begin())];
}

double CadlagPath::eval(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("evaluation time outside [0, 1]");
  return initial_value_ + cont(t) + jump_sum(t);
}

double CadlagPath::eval_left(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("evaluation time outside [0, 1]");
  if (t == 0.0) return eval(0.0);
  return initial_value_ + cont(t) + jump_sum_left(t);
}

double CadlagPath::cont_oscillation() const {
  auto [lo, hi] = std::minmax_element(grid_.begin(), grid_.end());
  return *hi - *lo;
}

bool CadlagPath::is_step() const { return has_constant_cont() && eval(0.0) == 0.0; }

CadlagPath CadlagPath::refined(std::size_t cells_out) const {
  const std::size_t n = cells();
  if (cells_out == n) return *this;
  if (cells_out < n || cells_out % n != 0)
    throw DomainError("refined grid must be a multiple of the current grid");
  const std::size_t k = cells_out / n;
  std::vector<double> grid(cells_out + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = grid_[i];
    const double b = grid_[i + 1];
    for (std::size_t r = 0; r < k; ++r)
      grid[i * k + r] = a + (b - a) * static_cast<double>(r) / static_cast<double>(k);
  }
  grid[cells_out] = grid_[n];
  CadlagPath out = *this;
  out.grid_ = std::move(grid);
  out.delta_ = 1.0 / static_cast<double>(cells_out);
  return out;
}

std::vector<double> merged_breakpoints(std::span<const CadlagPath* const> paths) {
  std::vector<double> pts;
  std::size_t last_cells = 0;
  for (const CadlagPath* p : paths) {
    if (p->cells() != last_cells) {
      for (std::size_t i = 0; i <= p->cells(); ++i) pts.push_back(p->grid_time(i));
      last_cells = p->cells();
    }
    for (const auto& j : p->jumps()) pts.push_back(j.time);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double PathExtremes::sup_norm() const { return std::max(std::abs(sup), std::abs(inf)); }

PathExtremes extremes(const CadlagPath& x) {
  const auto grid = x.grid_values();
  const auto jumps = x.jumps();
  const double x0 = x.initial_value();
  double level = 0.0;
  PathExtremes e{x0 + grid[0], x0 + grid[0]};
  auto take = [&e](double v) {
    e.sup = std::max(e.sup, v);
    e.inf = std::min(e.inf, v);
  };
  std::size_t k = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = x.grid_time(i);
    while (k < jumps.size() && jumps[k].time <= t) {
      const double left = x0 + x.cont(jumps[k].time) + level;
      take(left);
      level += jumps[k].size;
      take(left + jumps[k].size);
      ++k;
    }
    take(x0 + grid[i] + level);
  }
  return e;
}

std::pair<double, double> largest_jump_sizes(const CadlagPath& x) {
  double up = 0.0;
  double down = 0.0;
  for (const auto& j : x.jumps()) {
    if (j.size > 0.0)
      up = std::max(up, j.size);
    else
      down = std::max(down, -j.size);
  }
  return {up, down};
}

TimeChange::TimeChange() : knots_{{0.0, 0.0}, {1.0, 1.0}} {}

TimeChange::TimeChange(std::vector<Knot> interior_knots) {
  knots_.reserve(interior_knots.size() + 2);
  knots_.emplace_back(0.0, 0.0);
  for (const auto& k : interior_knots) {
    const auto& prev = knots_.back();
    if (!(k.first > prev.first && k.second > prev.second && k.first < 1.0 && k.second < 1.0))
      throw DomainError("time-change knots must be strictly increasing inside (0, 1)");
    knots_.push_back(k);
  }
  knots_.emplace_back(1.0, 1.0);
}

double TimeChange::operator()(double s) const {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), s,
                             [](double v, const Knot& k) { return v < k.first; });
  const Knot& b = *it;
  const Knot& a = *(it - 1);
  if (s == a.first) return a.second;
  return a.second + (s - a.first) * (b.second - a.second) / (b.first - a.first);
}

double TimeChange::inverse(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                             [](double v, const Knot& k) { return v < k.second; });
  const Knot& b = *it;
  const Knot& a = *(it - 1);
  if (t == a.second) return a.first;
  return a.first + (t - a.second) * (b.first - a.first) / (b.second - a.second);
}

double TimeChange::displacement() const {
  double d = 0.0;
  for (const auto& [s, l] : knots_) d = std::max(d, std::abs(l - s));
  return d;
}

double uniform_distance(const CadlagPath& x, const CadlagPath& y) {
  const CadlagPath* ps[] = {&x, &y};
  double d = 0.0;
  for (double t : merged_breakpoints(ps)) {
    d = std::max(d, std::abs(x.eval(t) - y.eval(t)));
    d = std::max(d, std::abs(x.eval_left(t) - y.eval_left(t)));
  }
  return d;
}

double l1_distance(const CadlagPath& x, const CadlagPath& y) {
  const CadlagPath* ps[] = {&x, &y};
  const auto pts = merged_breakpoints(ps);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    const double da = x.eval(a) - y.eval(a);
    const double db = x.eval_left(b) - y.eval_left(b);
    const double h = b - a;
    if (da * db >= 0.0)
      total += 0.5 * h * (std::abs(da) + std::abs(db));
    else
      total += 0.5 * h * (da * da + db * db) / (std::abs(da) + std::abs(db));
  }
  return total;
}

CadlagPath compose_time_change(const CadlagPath& x, const TimeChange& lambda) {
  std::vector<double> grid(x.cells() + 1);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = x.cont(lambda(x.grid_time(i)));
  std::vector<JumpEvent> jumps;
  jumps.reserve(x.jumps().size());
  for (const auto& j : x.jumps()) jumps.push_back({lambda.inverse(j.time), j.size});
  return CadlagPath(x.initial_value(), x.delta(), std::move(grid), std::move(jumps),
                    x.jump_floor());
}

namespace {

// Snap u onto a jump time of x when rounding put it a few ulps away.
double snap_to_jump(const CadlagPath& x, double u) {
  const auto jumps = x.jumps();
  auto it = std::lower_bound(jumps.begin(), jumps.end(), u, time_less);
  constexpr double eps = 1e-13;
  if (it != jumps.end() && it->time - u <= eps) return it->time;
  if (it != jumps.begin() && u - (it - 1)->time <= eps) return (it - 1)->time;
  return u;
}

}  // namespace

double composed_uniform_distance(const CadlagPath& x, const TimeChange& lambda,
                                 const CadlagPath& y) {
  std::vector<double> pts;
  pts.reserve(x.cells() + y.cells() + x.jumps().size() + y.jumps().size() + 8);
  for (std::size_t i = 0; i <= y.cells(); ++i) pts.push_back(y.grid_time(i));
  for (const auto& j : y.jumps()) pts.push_back(j.time);
  for (std::size_t i = 0; i <= x.cells(); ++i) pts.push_back(lambda.inverse(x.grid_time(i)));
  for (const auto& j : x.jumps()) pts.push_back(lambda.inverse(j.time));
  for (const auto& k : lambda.knots()) pts.push_back(k.first);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  double d = 0.0;
  for (double t : pts) {
    t = std::clamp(t, 0.0, 1.0);
    const double u = snap_to_jump(x, std::clamp(lambda(t), 0.0, 1.0));
    d = std::max(d, std::abs(x.eval(u) - y.eval(t)));
    d = std::max(d, std::abs(x.eval_left(u) - y.eval_left(t)));
  }
  return d;
}

}  // namespace levyld
