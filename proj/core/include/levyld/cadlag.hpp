#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace levyld {

inline constexpr double kDefaultGridDelta = 1.0 / 4096.0;
inline constexpr double kDefaultJumpFloor = 1e-9;

struct JumpEvent {
  double time = 0.0;  // in (0, 1]
  double size = 0.0;  // nonzero

  friend bool operator==(const JumpEvent&, const JumpEvent&) = default;
};

/// A right-continuous path with left limits on [0, 1].
///
/// The value at t is initial_value + cont(t) + (sum of jump sizes at times
/// <= t), where cont is the piecewise-linear interpolant of grid_values on the
/// uniform grid {0, delta, ..., 1}. Jumps are kept in an explicit registry so
/// that jump counts and sizes survive every transformation exactly.
///
/// A step path uses the trivial grid {0, 1} with grid_values {0, 0}.
class CadlagPath {
 public:
  /// The zero path.
  CadlagPath();

  /// Validates and normalises the inputs. Jumps are sorted by time; a jump
  /// with |size| below jump_floor is folded into the continuous part.
  /// Throws DomainError on non-uniform grids, jump times outside (0, 1],
  /// duplicate jump times or non-finite values.
  CadlagPath(double initial_value, double delta, std::vector<double> grid_values,
             std::vector<JumpEvent> jumps, double jump_floor = kDefaultJumpFloor);

  static CadlagPath zero() { return CadlagPath(); }
  static CadlagPath step(std::vector<JumpEvent> jumps, double initial_value = 0.0);
  /// Samples `cont` on the uniform grid of step `delta`.
  static CadlagPath from_function(const std::function<double(double)>& cont, double delta,
                                  std::vector<JumpEvent> jumps = {},
                                  double initial_value = 0.0);

  double initial_value() const noexcept { return initial_value_; }
  double delta() const noexcept { return delta_; }
  std::size_t cells() const noexcept { return grid_.size() - 1; }
  std::span<const double> grid_values() const noexcept { return grid_; }
  std::span<const JumpEvent> jumps() const noexcept { return jumps_; }
  double jump_floor() const noexcept { return jump_floor_; }

  /// Time of grid node i; exactly 1 at the last node.
  double grid_time(std::size_t i) const noexcept {
    return i >= cells() ? 1.0 : static_cast<double>(i) * delta_;
  }

  double cont(double t) const;
  /// Sum of jump sizes at times <= t.
  double jump_sum(double t) const;
  /// Sum of jump sizes at times < t.
  double jump_sum_left(double t) const;

  /// Right-continuous value; throws DomainError for t outside [0, 1].
  double eval(double t) const;
  /// Left limit x(t-); eval_left(0) == eval(0).
  double eval_left(double t) const;

  /// Largest minus smallest grid value of the continuous part.
  double cont_oscillation() const;
  bool has_constant_cont() const { return cont_oscillation() == 0.0; }
  /// Constant continuous part and value 0 at the origin.
  bool is_step() const;

  /// Continuous part resampled on a grid with `cells` cells. `cells` must be
  /// a multiple of the current cell count (refinement is exact).
  CadlagPath refined(std::size_t cells) const;

  friend bool operator==(const CadlagPath&, const CadlagPath&) = default;

 private:
  void rebuild_prefix();

  double initial_value_ = 0.0;
  double delta_ = 1.0;
  std::vector<double> grid_{0.0, 0.0};
  std::vector<JumpEvent> jumps_;
  std::vector<double> prefix_{0.0};  // prefix_[k] = sum of the first k sizes
  double jump_floor_ = kDefaultJumpFloor;
};

/// Sorted union of grid nodes and jump times of the given paths.
std::vector<double> merged_breakpoints(std::span<const CadlagPath* const> paths);

struct PathExtremes {
  double sup = 0.0;
  double inf = 0.0;
  double sup_norm() const;
};

/// Supremum and infimum over [0, 1], left limits included.
PathExtremes extremes(const CadlagPath& x);

/// (largest upward jump, largest downward jump magnitude); zeros when absent.
std::pair<double, double> largest_jump_sizes(const CadlagPath& x);

/// Increasing piecewise-linear bijection of [0, 1].
class TimeChange {
 public:
  using Knot = std::pair<double, double>;  // (s, lambda(s))

  /// The identity e.
  TimeChange();
  /// Interior knots; (0,0) and (1,1) are added. Both coordinates must be
  /// strictly increasing inside (0, 1), otherwise DomainError.
  explicit TimeChange(std::vector<Knot> interior_knots);

  double operator()(double s) const;
  double inverse(double t) const;
  /// ||lambda - e||, attained at a knot.
  double displacement() const;
  std::span<const Knot> knots() const noexcept { return knots_; }

 private:
  std::vector<Knot> knots_;
};

/// sup_t |x(t) - y(t)|, exact for the piecewise-linear representation.
double uniform_distance(const CadlagPath& x, const CadlagPath& y);

/// Integral over [0, 1] of |x(t) - y(t)|, exact for the representation.
double l1_distance(const CadlagPath& x, const CadlagPath& y);

/// x o lambda. Jumps move to lambda^{-1}(time) with unchanged sizes; the
/// continuous part is cont o lambda resampled on x's grid.
CadlagPath compose_time_change(const CadlagPath& x, const TimeChange& lambda);

/// sup_t |x(lambda(t)) - y(t)| evaluated without resampling.
double composed_uniform_distance(const CadlagPath& x, const TimeChange& lambda,
                                 const CadlagPath& y);

struct J1Bracket {
  double lower = 0.0;
  double upper = 0.0;
  bool converged = false;
  /// Produced by the exact step-path algorithm.
  bool exact = false;

  double width() const { return upper - lower; }
};

struct J1Options {
  double tol = 1e-6;
  /// Objective evaluations allowed for knot coordinate descent (general paths).
  int descent_evals = 200;
};

/// Skorokhod J1 distance as a certified bracket. Piecewise-constant inputs
/// use the exact matching algorithm; other inputs get a bracket from a
/// greedy-matched time change (upper) and necessary conditions (lower).
J1Bracket j1_distance(const CadlagPath& x, const CadlagPath& y, const J1Options& opts);
inline J1Bracket j1_distance(const CadlagPath& x, const CadlagPath& y, double tol = 1e-6) {
  return j1_distance(x, y, J1Options{tol});
}

/// Exact J1 distance between piecewise-constant paths, by bisection on the
/// radius with a dynamic-programming feasibility check over monotone jump
/// matchings. Throws DomainError when either path has a non-constant
/// continuous part.
J1Bracket j1_step_exact(const CadlagPath& x, const CadlagPath& y, double tol = 1e-12);

/// Whether the exact algorithm finds a time change of radius r.
bool j1_step_feasible(const CadlagPath& x, const CadlagPath& y, double r);

/// A class D_{up,down} of step paths vanishing at 0.
struct StepClass {
  int up = 0;
  int down = 0;
  friend bool operator==(const StepClass&, const StepClass&) = default;
};

/// Bracket on the J1 distance from x to the union of the given step classes.
/// Throws DomainError on an empty class list.
J1Bracket distance_to_step_class(const CadlagPath& x, std::span<const StepClass> classes,
                                 double tol = 1e-6);

}  // namespace levyld
