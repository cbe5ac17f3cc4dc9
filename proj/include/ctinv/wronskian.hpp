#pragma once

#include <numbers>
#include <vector>

namespace ctinv {

/// One-term order pair: l from the phase-shift set, L from the shifted set.
/// Both exceed -1/2 and differ.
struct PairParams {
  double l;
  double L;

  static PairParams create(double l, double L);
};

/// u_L v_l' - u_L' v_l at x > 0, without checking L != l. With L == l the
/// result is the Riccati normalization, identically 1.
double riccati_wronskian(double l, double L, double x);

/// W_{Ll}(x) = u_L(x) v_l'(x) - u_L'(x) v_l(x).
double wronskian(const PairParams& pair, double x);

/// Leading behaviour W(x) ~ coefficient * x^exponent as x -> 0+.
struct OriginAsymptote {
  double coefficient;  // 2^{l-L-1} (L+l+1) Gamma(l+1/2) / Gamma(L+3/2) > 0
  double exponent;     // L - l
};

OriginAsymptote origin_coefficient(const PairParams& pair);

/// lim_{x->inf} W(x) = cos((l - L) pi / 2).
double infinity_limit(const PairParams& pair);

/// Theorem: W has no zero on (0, inf) iff 0 < |L - l| <= 1.
bool is_nonsingular_pair(const PairParams& pair);

struct WronskianSample {
  double x;
  double w;
};

struct WronskianRoot {
  double x;
  double bracket_lo;
  double bracket_hi;
  bool polished;  // false when the bracketed refinement hit its iteration cap
};

struct WronskianProfile {
  PairParams pair;
  double x_max;
  double step;
  std::vector<WronskianSample> samples;
  std::vector<WronskianRoot> roots;
  int sign_origin;
  double limit_infinity;
  /// Abscissae where |W| dips below 1e-12 without a sign change.
  std::vector<double> tangency_warnings;
};

inline constexpr double kDefaultRootScanMax = 100.0;
inline constexpr double kDefaultRootScanStep = std::numbers::pi / 8.0;

/// Sign-change roots of W on (0, x_max]. Only strict sign changes count, so
/// the decaying envelope at |l - L| = 1 never produces a root.
WronskianProfile find_roots(const PairParams& pair, double x_max = kDefaultRootScanMax,
                            double step = kDefaultRootScanStep);

}  // namespace ctinv
