#pragma once

#include <optional>
#include <vector>

namespace ctinv {

enum class ZeroKind { J, Y, JPrime };

/// n-th strictly positive zero (1-based) of J_nu, Y_nu or J'_nu.
/// For J'_nu the first positive stationary point is n = 1; x = 0 never counts.
struct ZeroQuery {
  double nu;
  int n;
  ZeroKind kind;
};

double bessel_zero(const ZeroQuery& query);

/// The first `count` zeros of one kind, strictly increasing. Cheaper than
/// `count` separate calls to bessel_zero.
std::vector<double> bessel_zeros(ZeroKind kind, double nu, int count);

/// Interlacing of y_{l+1/2,n} and j_{L+1/2,n} for l < L.
/// Index n is regular iff y_{l+1/2,n} < j_{L+1/2,n} < y_{l+1/2,n+1}.
struct InterlaceReport {
  double l;
  double L;
  int checked_up_to;
  std::vector<bool> regular;  // regular[n-1] is the verdict for index n
  std::optional<int> first_irregular;
};

/// Requires l < L; for L < l swap the roles (the argument mirrors).
InterlaceReport interlace_scan(double l, double L, int count);

/// j'_{nu,n+1} - j_{nu+1,n}; positive when the inequality holds.
double proposition_margin(double nu, int n);

/// True iff j_{nu+1,n} < j'_{nu,n+1} with a margin above the 1e-9 zero accuracy.
bool check_proposition(double nu, int n);

}  // namespace ctinv
