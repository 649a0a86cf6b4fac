#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "levyld/cadlag.hpp"

namespace levyld {

/// Bounded Lipschitz drift b with its declared constants.
struct DriftSpec {
  std::string name;
  std::function<double(double)> b;
  double bound_C = 0.0;
  double lipschitz_L = 0.0;
  /// b == 0 identically; the solution map is then the identity.
  bool zero = false;

  double operator()(double y) const { return b(y); }
};

DriftSpec drift_zero();
DriftSpec drift_const(double c);
/// y -> a cos(y)
DriftSpec drift_cos_scaled(double a);
/// y -> a tanh(y)
DriftSpec drift_tanh_scaled(double a);

/// Registry lookup: zero, const, cos_scaled, tanh_scaled. `param` is c or a
/// and is ignored by zero. Throws DomainError on an unknown name.
DriftSpec make_drift(const std::string& name, double param);
std::vector<std::string> drift_names();

/// User drift. Bound and Lipschitz constant are spot-checked on 10^4 random
/// pairs; a violation throws DomainError.
DriftSpec custom_drift(std::string name, std::function<double(double)> b, double bound_C,
                       double lipschitz_L, std::uint64_t check_seed = 0);

enum class Scheme { rk4, euler };

struct SolverConfig {
  /// Predictor for each cell; the corrector always solves the trapezoidal
  /// form of f = int b(f) + g.
  Scheme scheme = Scheme::rk4;
  double step = kDefaultGridDelta;
  double picard_tol = 1e-8;
  int picard_max_iter = 50;
};

/// f = F(g), i.e. f(t) = int_0^t b(f(s)) ds + g(t). The output grid is g's
/// grid refined to `step`; jumps are copied from g unchanged. Throws
/// ConvergenceError when the residual exceeds picard_tol.
CadlagPath apply_F(const DriftSpec& drift, const CadlagPath& g, const SolverConfig& cfg = {});

/// g = F^{-1}(f), i.e. g(t) = f(t) - int_0^t b(f(s)) ds, with the quadrature
/// used by apply_F, so the two are inverse to within the solver residual.
CadlagPath apply_F_inverse(const DriftSpec& drift, const CadlagPath& f,
                           const SolverConfig& cfg = {});

/// sup_t |f(t) - int_0^t b(f) - g(t)| under the solver quadrature.
double solution_residual(const DriftSpec& drift, const CadlagPath& f, const CadlagPath& g,
                         const SolverConfig& cfg = {});

/// Forward Euler for dY = b(Y) dt + d(noise), with steps split at the jump
/// times of the noise and jumps applied atomically.
CadlagPath euler_solve_sde(const DriftSpec& drift, const CadlagPath& noise, double step);

}  // namespace levyld
