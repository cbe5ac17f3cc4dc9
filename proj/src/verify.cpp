#include "ctinv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/interpolators/makima.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ctinv/specfun.hpp"

namespace ctinv {
namespace {

constexpr double kPi = std::numbers::pi;
// h^2 |q| above this at a node means q varies on the scale of the step.
constexpr double kResolutionLimit = 1.0;

// Reduce to (-pi/2, pi/2].
double reduce_mod_pi(double d) {
  double r = std::remainder(d, kPi);
  if (r <= -kPi / 2.0) r += kPi;
  return r;
}

// Samples of g(x) = l(l+1)/x^2 + q(x) - 1 on x_i = x0 + i h.
struct NodeGrid {
  double x0;
  double h;
  std::vector<double> g;

  double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
};

// tan(delta) = (y1 u2 - y2 u1) / (y1 v2 - y2 v1) for y = u cos d - v sin d.
double match_phase(double l, double x1, double x2, double y1, double y2) {
  const double u1 = riccati_u(l, x1), u2 = riccati_u(l, x2);
  const double v1 = riccati_v(l, x1), v2 = riccati_v(l, x2);
  const double num = y1 * u2 - y2 * u1;
  const double den = y1 * v2 - y2 * v1;
  return std::atan2(num, den);
}

// Numerov over nodes first, first+stride, ...; returns the phase matched at
// the node pairs closest to each requested radius.
std::vector<double> numerov_phases(const NodeGrid& grid, double l, std::size_t first,
                                   std::size_t stride, const std::vector<double>& radii) {
  const double h = grid.h * static_cast<double>(stride);
  const double c = h * h / 12.0;
  std::vector<std::size_t> match_steps;
  for (const double r : radii) {
    const double steps = std::round((r - grid.x(first)) / h);
    match_steps.push_back(static_cast<std::size_t>(std::max(steps, 2.0)));
  }
  const std::size_t last = *std::max_element(match_steps.begin(), match_steps.end()) + 1;

  std::vector<double> phases(radii.size(), 0.0);
  auto node = [&](std::size_t k) { return first + k * stride; };
  // Free solution u_l ~ x^{l+1} as start values; the q-dependent correction
  // is what the 2 x_start probe measures.
  double y_prev = riccati_u(l, grid.x(node(0)));
  double y_curr = riccati_u(l, grid.x(node(1)));
  for (std::size_t k = 1; k < last; ++k) {
    const double g_prev = grid.g[node(k - 1)];
    const double g_curr = grid.g[node(k)];
    const double g_next = grid.g[node(k + 1)];
    const double y_next =
        (2.0 * (1.0 + 5.0 * c * g_curr) * y_curr - (1.0 - c * g_prev) * y_prev) / (1.0 - c * g_next);
    for (std::size_t m = 0; m < radii.size(); ++m) {
      if (match_steps[m] == k) {
        phases[m] = match_phase(l, grid.x(node(k)), grid.x(node(k + 1)), y_curr, y_next);
      }
    }
    y_prev = y_curr;
    y_curr = y_next;
    // Rescale to keep the recursion away from overflow.
    const double s = std::abs(y_curr);
    if (s > 1e100) {
      y_prev /= s;
      y_curr /= s;
    }
  }
  return phases;
}

// delta(X) = delta_inf + a / X  =>  delta_inf = 2 delta(X) - delta(X/2).
double extrapolate(double near_phase, double far_phase) {
  const double far = near_phase + std::remainder(far_phase - near_phase, kPi);
  return 2.0 * far - near_phase;
}

void check_options(double l, const SolverOptions& o) {
  if (!(l > -0.5)) throw DomainError("solve_phase_shift: l must exceed -1/2");
  if (!(o.x_start > 0.0) || !(o.step > 0.0) || !(o.x_max > 8.0 * o.x_start) ||
      !(o.step < o.x_max / 64.0)) {
    throw DomainError("solve_phase_shift: need 0 < x_start, 0 < step << x_max");
  }
}

PhaseShiftResult solve_impl(const PotentialSampler& potential, double l, const SolverOptions& o,
                            std::string source) {
  check_options(l, o);
  NodeGrid grid{o.x_start, o.step, {}};
  // One extra node beyond x_max for the two-point match.
  const auto count = static_cast<std::size_t>(std::ceil((o.x_max - o.x_start) / o.step)) + 8;
  grid.g.reserve(count);
  const double centrifugal = l * (l + 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = grid.x(i);
    const double q = potential(x);
    if (!std::isfinite(q)) {
      std::ostringstream msg;
      msg << "solve_phase_shift: potential not finite at x=" << x;
      throw SingularityError(msg.str(), x, std::numeric_limits<double>::quiet_NaN());
    }
    if (o.step * o.step * std::abs(q) > kResolutionLimit) {
      std::ostringstream msg;
      msg << "solve_phase_shift: |q(" << x << ")| = " << std::abs(q)
          << " is not resolved by the step; pole inside the integration range";
      throw SingularityError(msg.str(), x, std::numeric_limits<double>::quiet_NaN());
    }
    grid.g.push_back(centrifugal / (x * x) + q - 1.0);
  }

  const double X = o.x_max;
  const std::vector<double> radii{X / 2.0, X, 3.0 * X / 8.0, 3.0 * X / 4.0};
  const auto base = numerov_phases(grid, l, 0, 1, radii);
  const auto coarse = numerov_phases(grid, l, 0, 2, {X / 2.0, X});
  const auto start_index = static_cast<std::size_t>(std::round(o.x_start / o.step));
  const auto late = numerov_phases(grid, l, start_index, 1, {X / 2.0, X});

  const double delta = extrapolate(base[0], base[1]);
  const double probes[] = {extrapolate(coarse[0], coarse[1]), extrapolate(late[0], late[1]),
                           extrapolate(base[2], base[3])};
  double convergence = 0.0;
  for (const double p : probes) {
    convergence = std::max(convergence, std::abs(std::remainder(p - delta, kPi)));
  }

  PhaseShiftResult result{reduce_mod_pi(delta), reduce_mod_pi(base[1]), X, convergence,
                          o.x_start, o.step, std::move(source)};
  if (convergence > o.tolerance) {
    std::ostringstream msg;
    msg << "solve_phase_shift: convergence estimate " << convergence << " exceeds tolerance "
        << o.tolerance << " (delta=" << result.delta_mod_pi << ")";
    throw ConvergenceError(msg.str());
  }
  return result;
}

}  // namespace

PhaseShiftResult solve_phase_shift(const PotentialSampler& potential, double l,
                                   const SolverOptions& options) {
  return solve_impl(potential, l, options, "sampler");
}

PhaseShiftResult solve_phase_shift(const PotentialTable& table, double l,
                                   const SolverOptions& options) {
  check_options(l, options);
  const double hi = options.x_max + 8.0 * options.step;
  if (table.x.size() < 4 || table.x.front() > options.x_start || table.x.back() < hi) {
    throw DomainError("solve_phase_shift: table does not cover [x_start, x_max]");
  }
  for (const auto& p : table.singular_points) {
    if (p.x >= options.x_start && p.x <= hi) {
      std::ostringstream msg;
      msg << "solve_phase_shift: table lists a singular point at x=" << p.x;
      throw SingularityError(msg.str(), p.x, p.x);
    }
  }
  std::vector<double> xs, qs;
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    if (table.x[i] < options.x_start - 1.0 || table.x[i] > hi + 1.0) continue;
    if (table.singular[i] || !std::isfinite(table.q[i])) {
      std::ostringstream msg;
      msg << "solve_phase_shift: table flags a singularity at x=" << table.x[i];
      throw SingularityError(msg.str(), table.x[i], table.x[i]);
    }
    xs.push_back(table.x[i]);
    qs.push_back(table.q[i]);
  }
  const double x_lo = xs.front();
  const double x_hi = xs.back();
  const auto spline = std::make_shared<boost::math::interpolators::makima<std::vector<double>>>(
      std::move(xs), std::move(qs));
  PotentialSampler sampler = [spline, x_lo, x_hi](double x) {
    return (*spline)(std::clamp(x, x_lo, x_hi));
  };
  return solve_impl(sampler, l, options, "table");
}

double pole_order_estimate(const PotentialSampler& potential, double x_tilde, double window) {
  if (!(window > 0.0)) throw DomainError("pole_order_estimate: window must be positive");
  constexpr int kPerSide = 24;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  int count = 0;
  for (int i = 0; i < kPerSide; ++i) {
    const double d = window * std::pow(1e-3, static_cast<double>(i) / (kPerSide - 1));
    for (const double side : {-1.0, 1.0}) {
      const double q = std::abs(potential(x_tilde + side * d));
      if (!std::isfinite(q) || q == 0.0) continue;
      const double lx = std::log(d), ly = std::log(q);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      ++count;
    }
  }
  if (count < 8 || hi < 10.0 * lo) {
    throw ConvergenceError("pole_order_estimate: insufficient dynamic range in window");
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return -slope;
}

double weighted_abs_integral(const PotentialSampler& potential, double a, double b,
                             const std::vector<double>& exclusions, double radius) {
  if (!(b > a)) throw DomainError("weighted_abs_integral: need a < b");
  std::vector<std::pair<double, double>> pieces{{a, b}};
  std::vector<double> sorted = exclusions;
  std::sort(sorted.begin(), sorted.end());
  for (const double e : sorted) {
    std::vector<std::pair<double, double>> next;
    for (const auto& [lo, hi] : pieces) {
      if (e + radius <= lo || e - radius >= hi) {
        next.emplace_back(lo, hi);
        continue;
      }
      if (e - radius > lo) next.emplace_back(lo, e - radius);
      if (e + radius < hi) next.emplace_back(e + radius, hi);
    }
    pieces = std::move(next);
  }
  auto f = [&](double x) { return x * std::abs(potential(x)); };
  double total = 0.0;
  for (const auto& [lo, hi] : pieces) {
    // Unit-length panels keep the adaptive recursion local to each oscillation.
    const int panels = std::max(1, static_cast<int>(std::ceil(hi - lo)));
    const double w = (hi - lo) / panels;
    for (int i = 0; i < panels; ++i) {
      total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          f, lo + i * w, lo + (i + 1) * w, 20, 1e-10);
    }
  }
  return total;
}

}  // namespace ctinv
