#pragma once

#include <functional>
#include <string>

#include "levyld/cadlag.hpp"

namespace levyld {

/// Membership tests for a path set A: `contains_inner` tests the interior,
/// `contains_outer` the closure. `score` is positive inside the interior and
/// grows with depth; the witness search maximises it.
struct SetOracle {
  using Predicate = std::function<bool(const CadlagPath&)>;

  std::string name;
  Predicate contains_inner;
  Predicate contains_outer;
  std::function<double(const CadlagPath&)> score;
  /// Radius of the sup-norm ball (J1 ball around 0) the set is cut to.
  double declared_bound_M = 100.0;
  /// Asserted J1 distance from the lower step classes.
  double declared_margin = 0.0;

  bool in_ball(const CadlagPath& x) const;
};

/// {sup x > c}
SetOracle set_sup_exceed(double c, double bound_M = 100.0);
/// {x(1) in [a, b]}
SetOracle set_terminal(double a, double b, double bound_M = 100.0);
/// {sup x > c and inf x < -c_down}
SetOracle set_two_sided(double c, double c_down, double bound_M = 100.0);
/// {d_J1(x, ref) < r}: inner uses the bracket's upper end, outer its lower end.
SetOracle set_tube(CadlagPath ref, double r, double tol = 1e-6);
/// At least `up` upward jumps of size >= a and `down` downward jumps of
/// magnitude >= b.
SetOracle set_large_jumps(int up, double a, int down, double b, double bound_M = 100.0);
SetOracle set_whole();
SetOracle set_empty();

}  // namespace levyld
