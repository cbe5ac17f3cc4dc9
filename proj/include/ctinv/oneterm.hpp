#pragma once

// One-term Cox-Thompson inversion: one phase shift delta at angular
// momentum l is mapped to a shifted parameter L, from which the
// transformation kernel and the potential follow in closed form.
//
//   tan(delta - l pi/2) = tan(-L pi/2)   =>   L = l - (2/pi) delta + 2n
//   g(x, y) = c u_l(min) v_l(max),        c = l(l+1) - L(L+1)
//   K(x, y) = c v_l(x) u_L(y) / W_{Ll}(x),   x >= y
//   q(x)    = -(2/x) d/dx [K(x, x) / x]

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctinv/errors.hpp"
#include "ctinv/wronskian.hpp"

namespace ctinv {

struct PhaseShiftSpec {
  double l;
  double delta;  // radians
};

/// |L - l| below this marks a branch as degenerate (delta a multiple of pi).
inline constexpr double kDegenerateThreshold = 1e-9;
/// Offset used in place of L = l on a degenerate branch; the resulting
/// potential is O(kDegenerateEpsilon) and tends to zero with it.
inline constexpr double kDegenerateEpsilon = 1e-6;

struct BranchParams {
  PhaseShiftSpec spec;
  int n;
  double L;
  double coupling;  // l(l+1) - L(L+1), the one-term gamma_l
  /// L coincides with l. branch_parameter leaves L == l (coupling ~ 0);
  /// select_nonsingular substitutes L = l - kDegenerateEpsilon.
  bool degenerate;

  double l() const { return spec.l; }
};

class NoValidBranchError : public DomainError {
 public:
  NoValidBranchError(const std::string& what, std::vector<BranchParams> inspected)
      : DomainError(what), inspected_(std::move(inspected)) {}
  const std::vector<BranchParams>& inspected() const noexcept { return inspected_; }

 private:
  std::vector<BranchParams> inspected_;
};

/// Branch n of the tan relation. Throws DomainError when L <= -1/2.
BranchParams branch_parameter(const PhaseShiftSpec& spec, int n);

/// The branch with 0 < |L - l| <= 1 among n in [n_min, n_max] with L > -1/2.
/// An exact tie at |L - l| = 1 (delta = pi/2 mod pi) goes to the smaller |n|.
/// Throws NoValidBranchError, listing every candidate, when none qualifies.
BranchParams select_nonsingular(const PhaseShiftSpec& spec, int n_min = -5, int n_max = 5);

/// Candidates of the tan relation with L > -1/2 for n in [n_min, n_max].
std::vector<BranchParams> enumerate_branches(const PhaseShiftSpec& spec, int n_min = -5,
                                             int n_max = 5);

double input_kernel_g(const BranchParams& branch, double x, double y);

/// K(x, y) for x >= y > 0. Throws SingularityError near a root of W_{Ll}.
double kernel_K(const BranchParams& branch, double x, double y);

/// q(x), differentiated analytically with W'_{Ll}(x) = c u_L(x) v_l(x) / x^2.
/// Throws SingularityError near a root of W_{Ll}.
double potential_value(const BranchParams& branch, double x);

/// Uniform grid of `points` abscissae from x_min to x_max inclusive.
struct GridSpec {
  double x_min;
  double x_max;
  int points;

  std::vector<double> nodes() const;
};

struct SingularPoint {
  double x;
  double exclusion_radius;  // max(1e-3, distance within which |q| exceeds 1e8)
};

struct PotentialTable {
  BranchParams branch;
  std::vector<double> x;
  /// q(x); NaN where evaluation was impossible (on top of a pole).
  std::vector<double> q;
  /// Set for samples inside an exclusion window.
  std::vector<bool> singular;
  std::vector<SingularPoint> singular_points;
  double scan_x_max;
};

/// Tabulate q for a given branch. Never throws on singularities: samples
/// near a pole are flagged.
PotentialTable potential_table(const BranchParams& branch, std::span<const double> grid,
                               double scan_x_max = kDefaultRootScanMax);

/// Tabulate branch n, or the nonsingular branch when n is empty.
PotentialTable potential_table(const PhaseShiftSpec& spec, std::optional<int> n,
                               const GridSpec& grid, double scan_x_max = kDefaultRootScanMax);

/// K(x,y) - g(x,y) + int_0^x t^-2 K(x,t) g(t,y) dt, which vanishes when K
/// solves the Regge-Newton equation. Gauss-Legendre with quad_nodes/2 points
/// on [0, y] and on [y, x]; the t^{L+l} behaviour at the origin is removed
/// by a power substitution.
double residual_integral_equation(const BranchParams& branch, double x, double y,
                                  int quad_nodes = 64);

}  // namespace ctinv
