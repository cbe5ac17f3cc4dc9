#include "ctinv/oneterm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ctinv/quadrature.hpp"
#include "ctinv/specfun.hpp"

namespace ctinv {
namespace {

constexpr double kSingularW = 1e-12;
constexpr double kPoleMagnitude = 1e8;
constexpr double kMinExclusion = 1e-3;

double coupling_of(double l, double L) { return l * (l + 1.0) - L * (L + 1.0); }

BranchParams make_branch(const PhaseShiftSpec& spec, int n, double L, bool degenerate) {
  return {spec, n, L, coupling_of(spec.l, L), degenerate};
}

void check_spec(const PhaseShiftSpec& spec) {
  if (!(spec.l > -0.5) || !std::isfinite(spec.l)) {
    throw DomainError("PhaseShiftSpec: l must be finite and exceed -1/2");
  }
  if (!std::isfinite(spec.delta)) throw DomainError("PhaseShiftSpec: delta must be finite");
}

double nearest_root(const BranchParams& branch, double x) {
  if (branch.L == branch.l()) return std::numeric_limits<double>::quiet_NaN();
  const auto profile = find_roots({branch.l(), branch.L}, std::max(kDefaultRootScanMax, 2.0 * x));
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const auto& root : profile.roots) {
    if (std::isnan(best) || std::abs(root.x - x) < std::abs(best - x)) best = root.x;
  }
  return best;
}

// Riccati values entering K(x, x) and its derivative at one abscissa.
struct LocalTerms {
  RiccatiValue u_big;  // u_L
  RiccatiValue v;      // v_l
  double w;
};

LocalTerms local_terms(const BranchParams& branch, double x, const char* who) {
  LocalTerms t{riccati_u_eval(branch.L, x), riccati_v_eval(branch.l(), x), 0.0};
  t.w = t.u_big.value * t.v.derivative - t.u_big.derivative * t.v.value;
  const double scale = std::max({std::abs(t.u_big.value * t.v.derivative),
                                 std::abs(t.u_big.derivative * t.v.value), 1e-300});
  if (std::abs(t.w) < kSingularW * scale) {
    std::ostringstream msg;
    msg << who << ": Wronskian vanishes at x=" << x << " (l=" << branch.l() << ", L=" << branch.L
        << ")";
    throw SingularityError(msg.str(), x, nearest_root(branch, x));
  }
  return t;
}

}  // namespace

BranchParams branch_parameter(const PhaseShiftSpec& spec, int n) {
  check_spec(spec);
  const double L = spec.l - 2.0 / std::numbers::pi * spec.delta + 2.0 * n;
  if (!(L > -0.5)) {
    std::ostringstream msg;
    msg << "branch_parameter: n=" << n << " gives L=" << L << ", outside (-1/2, inf)";
    throw DomainError(msg.str());
  }
  return make_branch(spec, n, L, std::abs(L - spec.l) < kDegenerateThreshold);
}

std::vector<BranchParams> enumerate_branches(const PhaseShiftSpec& spec, int n_min, int n_max) {
  check_spec(spec);
  std::vector<BranchParams> out;
  for (int n = n_min; n <= n_max; ++n) {
    const double L = spec.l - 2.0 / std::numbers::pi * spec.delta + 2.0 * n;
    if (L > -0.5) out.push_back(branch_parameter(spec, n));
  }
  return out;
}

BranchParams select_nonsingular(const PhaseShiftSpec& spec, int n_min, int n_max) {
  check_spec(spec);
  if (n_min > n_max) throw DomainError("select_nonsingular: empty branch window");

  std::vector<BranchParams> inspected;
  std::optional<BranchParams> chosen;
  for (int n = n_min; n <= n_max; ++n) {
    const double L = spec.l - 2.0 / std::numbers::pi * spec.delta + 2.0 * n;
    const BranchParams candidate = make_branch(spec, n, L, std::abs(L - spec.l) < kDegenerateThreshold);
    inspected.push_back(candidate);
    if (!(L > -0.5)) continue;
    const double gap = std::abs(L - spec.l);
    if (!(candidate.degenerate || gap <= 1.0)) continue;
    if (!chosen || std::abs(n) < std::abs(chosen->n)) chosen = candidate;
  }
  if (!chosen) {
    std::ostringstream msg;
    msg << "select_nonsingular: no branch with 0 < |L - l| <= 1 and L > -1/2 for l=" << spec.l
        << ", delta=" << spec.delta << "; candidates L =";
    for (const auto& b : inspected) msg << ' ' << b.L << " (n=" << b.n << ')';
    throw NoValidBranchError(msg.str(), std::move(inspected));
  }
  if (chosen->degenerate) {
    // Limit replacement L -> l; approach from below unless that leaves (-1/2, inf).
    const double L = spec.l - kDegenerateEpsilon > -0.5 ? spec.l - kDegenerateEpsilon
                                                         : spec.l + kDegenerateEpsilon;
    return make_branch(spec, chosen->n, L, true);
  }
  return *chosen;
}

double input_kernel_g(const BranchParams& branch, double x, double y) {
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  return branch.coupling * riccati_u(branch.l(), lo) * riccati_v(branch.l(), hi);
}

double kernel_K(const BranchParams& branch, double x, double y) {
  if (!(x >= y) || !(y > 0.0)) throw DomainError("kernel_K: requires x >= y > 0");
  const LocalTerms t = local_terms(branch, x, "kernel_K");
  return branch.coupling * t.v.value * riccati_u(branch.L, y) / t.w;
}

double potential_value(const BranchParams& branch, double x) {
  if (!(x > 0.0)) throw DomainError("potential_value: requires x > 0");
  const LocalTerms t = local_terms(branch, x, "potential_value");
  const double c = branch.coupling;
  const double uv = t.u_big.value * t.v.value;
  const double uv_prime = t.v.derivative * t.u_big.value + t.v.value * t.u_big.derivative;
  // F = c uv / (x W);  F' = c [uv' / (x W) - uv / (x^2 W) - uv W' / (x W^2)]
  const double w_prime = c * uv / (x * x);
  const double f_prime = c * (uv_prime / (x * t.w) - uv / (x * x * t.w) - uv * w_prime / (x * t.w * t.w));
  return -2.0 / x * f_prime;
}

std::vector<double> GridSpec::nodes() const {
  if (points < 2 || !(x_min > 0.0) || !(x_max > x_min) || !std::isfinite(x_max)) {
    throw DomainError("GridSpec: need points >= 2 and 0 < x_min < x_max");
  }
  std::vector<double> out(static_cast<std::size_t>(points));
  const double h = (x_max - x_min) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = x_min + i * h;
  out.back() = x_max;
  return out;
}

PotentialTable potential_table(const BranchParams& branch, std::span<const double> grid,
                               double scan_x_max) {
  if (grid.empty()) throw DomainError("potential_table: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw DomainError("potential_table: grid must be positive and strictly increasing");
    }
  }

  PotentialTable table;
  table.branch = branch;
  table.x.assign(grid.begin(), grid.end());
  table.scan_x_max = std::max(scan_x_max, grid.back());

  auto magnitude = [&branch](double x) {
    try {
      return std::abs(potential_value(branch, x));
    } catch (const SingularityError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  if (branch.L != branch.l()) {
    const auto profile = find_roots({branch.l(), branch.L}, table.scan_x_max);
    for (const auto& root : profile.roots) {
      double reach = 0.0;
      for (double d = 1e-10; d < 1.0; d *= 1.25) {
        if (std::max(magnitude(root.x - d), magnitude(root.x + d)) >= kPoleMagnitude) reach = d;
      }
      table.singular_points.push_back({root.x, std::max(kMinExclusion, reach)});
    }
  }

  table.q.reserve(grid.size());
  table.singular.reserve(grid.size());
  for (const double x : grid) {
    bool flagged = std::any_of(table.singular_points.begin(), table.singular_points.end(),
                               [x](const SingularPoint& p) { return std::abs(x - p.x) < p.exclusion_radius; });
    double q = std::numeric_limits<double>::quiet_NaN();
    try {
      q = potential_value(branch, x);
    } catch (const SingularityError&) {
      flagged = true;
    }
    table.q.push_back(q);
    table.singular.push_back(flagged);
  }
  return table;
}

PotentialTable potential_table(const PhaseShiftSpec& spec, std::optional<int> n,
                               const GridSpec& grid, double scan_x_max) {
  const BranchParams branch = n ? branch_parameter(spec, *n) : select_nonsingular(spec);
  const auto nodes = grid.nodes();
  return potential_table(branch, nodes, scan_x_max);
}

double residual_integral_equation(const BranchParams& branch, double x, double y, int quad_nodes) {
  if (!(x >= y) || !(y > 0.0)) throw DomainError("residual_integral_equation: requires x >= y > 0");
  if (quad_nodes < 2 || quad_nodes % 2 != 0) {
    throw DomainError("residual_integral_equation: quad_nodes must be even and >= 2");
  }
  const double l = branch.l();
  const double L = branch.L;
  const double c = branch.coupling;
  const LocalTerms at_x = local_terms(branch, x, "residual_integral_equation");
  const RiccatiValue u_y = riccati_u_eval(l, y);
  const RiccatiValue v_y = riccati_v_eval(l, y);

  const GaussRule rule = gauss_legendre(quad_nodes / 2);

  // [0, y]: integrand t^-2 u_L(t) u_l(t) ~ t^{L+l}. With t = y s^m and
  // m = k / (L+l+1), k = ceil(L+l+1), the transformed integrand is
  // s^{k-1} times a smooth function of s^{2m}.
  const double power = L + l + 1.0;
  const double m = std::ceil(power) / power;
  const double inner = integrate(
      rule,
      [&](double s) {
        if (s <= 0.0) return 0.0;
        const double t = y * std::pow(s, m);
        const double jacobian = m * t / s;
        return riccati_u(L, t) * riccati_u(l, t) / (t * t) * jacobian;
      },
      0.0, 1.0);

  // [y, x]: smooth, integrand t^-2 u_L(t) v_l(t).
  const double outer = x > y ? integrate(
                                   rule,
                                   [&](double t) { return riccati_u(L, t) * riccati_v(l, t) / (t * t); },
                                   y, x)
                             : 0.0;

  const double k_xy = c * at_x.v.value * riccati_u(L, y) / at_x.w;
  const double g_xy = c * u_y.value * at_x.v.value;
  const double integral = c * c * at_x.v.value / at_x.w * (v_y.value * inner + u_y.value * outer);
  return k_xy - g_xy + integral;
}

}  // namespace ctinv
