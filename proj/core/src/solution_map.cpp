#include "levyld/solution_map.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "levyld/error.hpp"

namespace levyld {

namespace {

std::string with_param(const std::string& name, double p) {
  std::ostringstream os;
  os << name << '(' << p << ')';
  return os.str();
}

std::size_t output_cells(const CadlagPath& p, double step) {
  if (!(step > 0.0 && step <= 1.0)) throw DomainError("solver step must lie in (0, 1]");
  const auto ns = static_cast<std::size_t>(std::llround(1.0 / step));
  if (std::abs(static_cast<double>(ns) * step - 1.0) > 1e-9)
    throw DomainError("solver step must divide [0, 1] evenly");
  const std::size_t n = p.cells();
  if (n >= ns) {
    if (n % ns != 0) throw DomainError("path grid is incompatible with the solver step");
    return n;
  }
  if (ns % n != 0) throw DomainError("path grid is incompatible with the solver step");
  return ns;
}

std::optional<CadlagPath> finer(const CadlagPath& p, std::size_t n) {
  if (p.cells() == n) return std::nullopt;
  return p.refined(n);
}

// Walks the cells of a uniform grid together with the jump registry. For cell
// [t0, t1] the jumps with t0 < time < t1 split it into pieces; a jump at t1
// belongs to the next cell's starting value.
class CellWalker {
 public:
  CellWalker(const CadlagPath& p, std::size_t n)
      : jumps_(p.jumps()), n_(n), dt_(1.0 / static_cast<double>(n)) {
    base_ = p.initial_value();
    while (next_ < jumps_.size() && jumps_[next_].time <= 0.0) base_ += jumps_[next_++].size;
  }

  double dt() const { return dt_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  /// initial value plus jumps at times <= t0
  double base() const { return base_; }
  std::span<const JumpEvent> interior() const { return interior_; }

  void enter(std::size_t i) {  // cell i in 1..n
    t0_ = i == 1 ? 0.0 : static_cast<double>(i - 1) * dt_;
    t1_ = i == n_ ? 1.0 : static_cast<double>(i) * dt_;
    const std::size_t first = next_;
    while (next_ < jumps_.size() && jumps_[next_].time < t1_) ++next_;
    interior_ = jumps_.subspan(first, next_ - first);
  }

  // Advance past the cell: fold jumps in (t0, t1] into the base.
  void leave() {
    for (const auto& j : interior_) base_ += j.size;
    while (next_ < jumps_.size() && jumps_[next_].time <= t1_) base_ += jumps_[next_++].size;
  }

 private:
  std::span<const JumpEvent> jumps_;
  std::size_t n_;
  double dt_;
  std::size_t next_ = 0;
  double base_ = 0.0;
  double t0_ = 0.0;
  double t1_ = 0.0;
  std::span<const JumpEvent> interior_;
};

// Trapezoidal integral of b(path) over one cell, with the continuous part
// linear from c0 to c1 and the jump sum piecewise constant.
double cell_integral(const DriftSpec& drift, const CellWalker& w, double c0, double c1) {
  const double t0 = w.t0();
  const double len = w.t1() - t0;
  const double slope = (c1 - c0) / len;
  double level = w.base();
  double a = t0;
  double fa = drift.b(level + c0);
  double total = 0.0;
  for (const auto& j : w.interior()) {
    const double cb = c0 + slope * (j.time - t0);
    total += 0.5 * (j.time - a) * (fa + drift.b(level + cb));
    level += j.size;
    a = j.time;
    fa = drift.b(level + cb);
  }
  total += 0.5 * (w.t1() - a) * (fa + drift.b(level + c1));
  return total;
}

double predict(const DriftSpec& drift, Scheme scheme, double level, double c0, double dg,
               double h) {
  const double s = dg / h;
  auto rhs = [&](double c) { return drift.b(level + c) + s; };
  if (scheme == Scheme::euler) return c0 + h * rhs(c0);
  const double k1 = rhs(c0);
  const double k2 = rhs(c0 + 0.5 * h * k1);
  const double k3 = rhs(c0 + 0.5 * h * k2);
  const double k4 = rhs(c0 + h * k3);
  return c0 + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

DriftSpec drift_zero() {
  DriftSpec d;
  d.name = "zero";
  d.b = [](double) { return 0.0; };
  d.zero = true;
  return d;
}

DriftSpec drift_const(double c) {
  if (!std::isfinite(c)) throw DomainError("drift constant must be finite");
  DriftSpec d;
  d.name = with_param("const", c);
  d.b = [c](double) { return c; };
  d.bound_C = std::abs(c);
  d.zero = c == 0.0;
  return d;
}

DriftSpec drift_cos_scaled(double a) {
  if (!std::isfinite(a)) throw DomainError("drift scale must be finite");
  DriftSpec d;
  d.name = with_param("cos_scaled", a);
  d.b = [a](double y) { return a * std::cos(y); };
  d.bound_C = std::abs(a);
  d.lipschitz_L = std::abs(a);
  d.zero = a == 0.0;
  return d;
}

DriftSpec drift_tanh_scaled(double a) {
  if (!std::isfinite(a)) throw DomainError("drift scale must be finite");
  DriftSpec d;
  d.name = with_param("tanh_scaled", a);
  d.b = [a](double y) { return a * std::tanh(y); };
  d.bound_C = std::abs(a);
  d.lipschitz_L = std::abs(a);
  d.zero = a == 0.0;
  return d;
}

std::vector<std::string> drift_names() { return {"zero", "const", "cos_scaled", "tanh_scaled"}; }

DriftSpec make_drift(const std::string& name, double param) {
  if (name == "zero") return drift_zero();
  if (name == "const") return drift_const(param);
  if (name == "cos_scaled") return drift_cos_scaled(param);
  if (name == "tanh_scaled") return drift_tanh_scaled(param);
  throw DomainError("unknown drift '" + name + "'");
}

DriftSpec custom_drift(std::string name, std::function<double(double)> b, double bound_C,
                       double lipschitz_L, std::uint64_t check_seed) {
  if (!b) throw DomainError("drift callable is empty");
  if (!(bound_C >= 0.0) || !(lipschitz_L >= 0.0))
    throw DomainError("drift constants must be non-negative");
  std::mt19937_64 rng(check_seed);
  std::uniform_real_distribution<double> x_dist(-50.0, 50.0);
  std::uniform_real_distribution<double> log_h(std::log(1e-6), std::log(10.0));
  for (int i = 0; i < 10000; ++i) {
    const double x = x_dist(rng);
    const double y = x + std::exp(log_h(rng)) * (i % 2 == 0 ? 1.0 : -1.0);
    const double bx = b(x);
    const double by = b(y);
    if (!std::isfinite(bx) || std::abs(bx) > bound_C * (1.0 + 1e-12) + 1e-300)
      throw DomainError("drift '" + name + "' exceeds its declared bound at " +
                        std::to_string(x));
    if (std::abs(bx - by) > lipschitz_L * std::abs(x - y) * (1.0 + 1e-9) + 1e-15)
      throw DomainError("drift '" + name + "' exceeds its declared Lipschitz constant near " +
                        std::to_string(x));
  }
  DriftSpec d;
  d.name = std::move(name);
  d.b = std::move(b);
  d.bound_C = bound_C;
  d.lipschitz_L = lipschitz_L;
  return d;
}

CadlagPath apply_F(const DriftSpec& drift, const CadlagPath& g, const SolverConfig& cfg) {
  if (drift.zero) return g;
  if (!(cfg.picard_tol > 0.0)) throw DomainError("picard_tol must be positive");
  const std::size_t n = output_cells(g, cfg.step);
  const auto gr = finer(g, n);
  const auto gv = gr ? gr->grid_values() : g.grid_values();

  std::vector<double> c(n + 1);
  c[0] = gv[0];
  const double inner_tol = cfg.picard_tol / (10.0 * static_cast<double>(n));
  double cum = 0.0;
  double residual = 0.0;
  CellWalker w(g, n);
  for (std::size_t i = 1; i <= n; ++i) {
    w.enter(i);
    const double dg = gv[i] - gv[i - 1];
    const double c0 = c[i - 1];
    double ci = predict(drift, cfg.scheme, w.base(), c0, dg, w.t1() - w.t0());
    double r = 0.0;
    for (int it = 0;; ++it) {
      const double phi = c0 + dg + cell_integral(drift, w, c0, ci);
      r = ci - phi;
      const double floor_tol = 4e-16 * (1.0 + std::abs(ci));
      if (std::abs(r) <= std::max(inner_tol, floor_tol) || it >= cfg.picard_max_iter) break;
      ci = phi;
    }
    c[i] = ci;
    cum += r;
    residual = std::max(residual, std::abs(cum));
    w.leave();
  }
  if (residual > cfg.picard_tol)
    throw ConvergenceError("solution map residual " + std::to_string(residual) +
                               " exceeds tolerance",
                           residual);
  std::vector<JumpEvent> jumps(g.jumps().begin(), g.jumps().end());
  return CadlagPath(g.initial_value(), 1.0 / static_cast<double>(n), std::move(c),
                    std::move(jumps), g.jump_floor());
}

CadlagPath apply_F_inverse(const DriftSpec& drift, const CadlagPath& f, const SolverConfig& cfg) {
  if (drift.zero) return f;
  const std::size_t n = output_cells(f, cfg.step);
  const auto fr = finer(f, n);
  const auto fv = fr ? fr->grid_values() : f.grid_values();
  std::vector<double> g(n + 1);
  g[0] = fv[0];
  double integral = 0.0;
  CellWalker w(f, n);
  for (std::size_t i = 1; i <= n; ++i) {
    w.enter(i);
    integral += cell_integral(drift, w, fv[i - 1], fv[i]);
    g[i] = fv[i] - integral;
    w.leave();
  }
  if (!std::isfinite(integral)) throw ConvergenceError("quadrature produced a non-finite value", integral);
  std::vector<JumpEvent> jumps(f.jumps().begin(), f.jumps().end());
  return CadlagPath(f.initial_value(), 1.0 / static_cast<double>(n), std::move(g),
                    std::move(jumps), f.jump_floor());
}

double solution_residual(const DriftSpec& drift, const CadlagPath& f, const CadlagPath& g,
                         const SolverConfig& cfg) {
  return uniform_distance(apply_F_inverse(drift, f, cfg), g);
}

CadlagPath euler_solve_sde(const DriftSpec& drift, const CadlagPath& noise, double step) {
  if (drift.zero) return noise;
  const std::size_t n = output_cells(noise, step);
  const auto nr = finer(noise, n);
  const auto nv = nr ? nr->grid_values() : noise.grid_values();
  std::vector<double> c(n + 1);
  c[0] = nv[0];
  CellWalker w(noise, n);
  for (std::size_t i = 1; i <= n; ++i) {
    w.enter(i);
    const double s = (nv[i] - nv[i - 1]) / (w.t1() - w.t0());
    double level = w.base();
    double y = c[i - 1];
    double a = w.t0();
    for (const auto& j : w.interior()) {
      const double h = j.time - a;
      y += (drift.b(level + y) + s) * h;
      level += j.size;
      a = j.time;
    }
    const double h = w.t1() - a;
    y += (drift.b(level + y) + s) * h;
    c[i] = y;
    w.leave();
  }
  std::vector<JumpEvent> jumps(noise.jumps().begin(), noise.jumps().end());
  return CadlagPath(noise.initial_value(), 1.0 / static_cast<double>(n), std::move(c),
                    std::move(jumps), noise.jump_floor());
}

}  // namespace levyld
