#include "levyld/set_oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>
#include <vector>

#include "levyld/error.hpp"

namespace levyld {

namespace {

std::string label(const std::string& base, std::initializer_list<double> params) {
  std::ostringstream os;
  os << base << '(';
  bool first = true;
  for (double p : params) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << ')';
  return os.str();
}

void check_bound(double M) {
  if (!(M > 0.0)) throw DomainError("set radius must be positive");
}

// k-th largest (1-based) magnitude among jumps with the given sign; 0 if fewer.
double kth_largest(const CadlagPath& x, int k, bool up) {
  if (k <= 0) return std::numeric_limits<double>::infinity();
  std::vector<double> mags;
  for (const auto& j : x.jumps())
    if ((j.size > 0.0) == up) mags.push_back(std::abs(j.size));
  if (static_cast<int>(mags.size()) < k) return 0.0;
  std::nth_element(mags.begin(), mags.begin() + (k - 1), mags.end(), std::greater<>());
  return mags[static_cast<std::size_t>(k - 1)];
}

}  // namespace

bool SetOracle::in_ball(const CadlagPath& x) const {
  return extremes(x).sup_norm() <= declared_bound_M;
}

SetOracle set_sup_exceed(double c, double M) {
  check_bound(M);
  SetOracle s;
  s.name = label("sup_exceed", {c});
  s.declared_bound_M = M;
  s.contains_inner = [c, M](const CadlagPath& x) {
    const auto e = extremes(x);
    return e.sup > c && e.sup_norm() < M;
  };
  s.contains_outer = [c, M](const CadlagPath& x) {
    const auto e = extremes(x);
    return e.sup >= c && e.sup_norm() <= M;
  };
  s.score = [c, M](const CadlagPath& x) {
    const auto e = extremes(x);
    return std::min(e.sup - c, M - e.sup_norm());
  };
  return s;
}

SetOracle set_terminal(double a, double b, double M) {
  check_bound(M);
  if (!(a <= b)) throw DomainError("terminal interval needs a <= b");
  SetOracle s;
  s.name = label("terminal", {a, b});
  s.declared_bound_M = M;
  s.contains_inner = [a, b, M](const CadlagPath& x) {
    const double v = x.eval(1.0);
    return v > a && v < b && extremes(x).sup_norm() < M;
  };
  s.contains_outer = [a, b, M](const CadlagPath& x) {
    const double v = x.eval(1.0);
    return v >= a && v <= b && extremes(x).sup_norm() <= M;
  };
  s.score = [a, b, M](const CadlagPath& x) {
    const double v = x.eval(1.0);
    return std::min({v - a, b - v, M - extremes(x).sup_norm()});
  };
  return s;
}

SetOracle set_two_sided(double c, double c_down, double M) {
  check_bound(M);
  SetOracle s;
  s.name = label("two_sided", {c, c_down});
  s.declared_bound_M = M;
  s.contains_inner = [c, c_down, M](const CadlagPath& x) {
    const auto e = extremes(x);
    return e.sup > c && e.inf < -c_down && e.sup_norm() < M;
  };
  s.contains_outer = [c, c_down, M](const CadlagPath& x) {
    const auto e = extremes(x);
    return e.sup >= c && e.inf <= -c_down && e.sup_norm() <= M;
  };
  s.score = [c, c_down, M](const CadlagPath& x) {
    const auto e = extremes(x);
    return std::min({e.sup - c, -c_down - e.inf, M - e.sup_norm()});
  };
  return s;
}

SetOracle set_tube(CadlagPath ref, double r, double tol) {
  if (!(r > 0.0)) throw DomainError("tube radius must be positive");
  SetOracle s;
  s.name = label("tube", {r});
  s.declared_bound_M = extremes(ref).sup_norm() + r;
  auto shared = std::make_shared<const CadlagPath>(std::move(ref));
  s.contains_inner = [shared, r, tol](const CadlagPath& x) {
    return j1_distance(x, *shared, tol).upper < r;
  };
  s.contains_outer = [shared, r, tol](const CadlagPath& x) {
    return j1_distance(x, *shared, tol).lower <= r;
  };
  s.score = [shared, r, tol](const CadlagPath& x) {
    return r - j1_distance(x, *shared, tol).upper;
  };
  return s;
}

SetOracle set_large_jumps(int up, double a, int down, double b, double M) {
  check_bound(M);
  if (up < 0 || down < 0) throw DomainError("jump counts must be non-negative");
  if ((up > 0 && !(a > 0.0)) || (down > 0 && !(b > 0.0)))
    throw DomainError("jump thresholds must be positive");
  SetOracle s;
  s.name = label("large_jumps", {static_cast<double>(up), a, static_cast<double>(down), b});
  s.declared_bound_M = M;
  s.declared_margin = std::min(up > 0 ? a : b, down > 0 ? b : a) / 2.0;
  s.contains_inner = [=](const CadlagPath& x) {
    return kth_largest(x, up, true) > a && kth_largest(x, down, false) > b &&
           extremes(x).sup_norm() < M;
  };
  s.contains_outer = [=](const CadlagPath& x) {
    return kth_largest(x, up, true) >= a && kth_largest(x, down, false) >= b &&
           extremes(x).sup_norm() <= M;
  };
  s.score = [=](const CadlagPath& x) {
    return std::min({kth_largest(x, up, true) - a, kth_largest(x, down, false) - b,
                     M - extremes(x).sup_norm()});
  };
  return s;
}

SetOracle set_whole() {
  SetOracle s;
  s.name = "whole";
  s.declared_bound_M = std::numeric_limits<double>::infinity();
  s.contains_inner = [](const CadlagPath&) { return true; };
  s.contains_outer = s.contains_inner;
  s.score = [](const CadlagPath&) { return 1.0; };
  return s;
}

SetOracle set_empty() {
  SetOracle s;
  s.name = "empty";
  s.contains_inner = [](const CadlagPath&) { return false; };
  s.contains_outer = s.contains_inner;
  s.score = [](const CadlagPath&) { return -1.0; };
  return s;
}

}  // namespace levyld
