#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ctinv/oneterm.hpp"

namespace ctinv {

using PotentialSampler = std::function<double(double)>;

struct SolverOptions {
  double x_start = 1e-2;
  double step = 1e-3;
  double x_max = 100.0;
  /// Largest admissible convergence estimate before the solve is rejected.
  double tolerance = 1e-2;
};

struct PhaseShiftResult {
  double delta_mod_pi;   // in (-pi/2, pi/2]
  double raw_delta;      // plain match at match_radius, no tail extrapolation
  double match_radius;
  double convergence;    // max deviation over the probe solves
  double x_start;
  double step;
  std::string grid_source;  // "sampler" or "table"
};

/// Phase shift at k = 1 of u'' + (1 - l(l+1)/x^2 - q(x)) u = 0.
///
/// Numerov from x_start with u ~ x^{l+1}; the solution is matched to
/// C sin(x - l pi/2 + delta) = C [u_l cos delta - v_l sin delta] at x_max/2
/// and x_max, and the two are Richardson-extrapolated for the 1/x tail
/// drift of potentials decaying like x^-2. Probes with step 2h, start
/// 2 x_start and match radii (3/8, 3/4) x_max give the convergence estimate.
///
/// Throws ConvergenceError when the estimate exceeds options.tolerance and
/// SingularityError when q is not finite, or too large for the step
/// (h^2 |q| > 1), inside the integration range.
PhaseShiftResult solve_phase_shift(const PotentialSampler& potential, double l,
                                   const SolverOptions& options = {});

/// Same, with q interpolated (modified Akima) from a table covering
/// [x_start, x_max] without flagged samples.
PhaseShiftResult solve_phase_shift(const PotentialTable& table, double l,
                                   const SolverOptions& options = {});

/// Least-squares slope p of log|q| against log|x - x_tilde|, sampled on both
/// sides for |x - x_tilde| in [window * 1e-3, window]. Throws ConvergenceError
/// when |q| varies by less than a decade over the window.
double pole_order_estimate(const PotentialSampler& potential, double x_tilde,
                           double window = 1e-2);

/// int x |q(x)| dx over [a, b] minus the windows |x - x_i| < radius around
/// each exclusion point (adaptive Gauss-Kronrod).
double weighted_abs_integral(const PotentialSampler& potential, double a, double b,
                             const std::vector<double>& exclusions = {}, double radius = 0.0);

}  // namespace ctinv
