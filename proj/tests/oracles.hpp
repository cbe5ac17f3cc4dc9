#pragma once

// Independent reference computations used only by the tests. None of these
// share code with the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

using Real = long double;

/// Ascending series sum_k (-1)^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)),
/// summed in extended precision. Good for x <~ 12.
inline Real bessel_j_series(Real nu, Real x) {
  const Real half = x / 2;
  Real term = std::pow(half, nu) / std::tgamma(nu + 1);
  Real sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= -half * half / (k * (k + nu));
    sum += term;
    if (std::abs(term) < 1e-24L * std::abs(sum) && k > 5) break;
  }
  return sum;
}

/// Y_0 from its logarithmic series.
inline Real bessel_y0_series(Real x) {
  constexpr Real kEuler = 0.57721566490153286060651209L;
  const Real q = x * x / 4;
  Real term = 1;
  Real harmonic = 0;
  Real tail = 0;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<Real>(k) * k);
    harmonic += 1.0L / k;
    const Real t = (k % 2 ? 1 : -1) * harmonic * term;
    tail += t;
    if (std::abs(t) < 1e-24L && k > 5) break;
  }
  const Real pi = std::numbers::pi_v<Real>;
  return 2 / pi * ((std::log(x / 2) + kEuler) * bessel_j_series(0, x) + tail);
}

/// Hankel large-argument expansion; returns {J, Y}. Reliable for x >> nu^2/8.
struct JY {
  Real j;
  Real y;
};

inline JY bessel_hankel(Real nu, Real x) {
  const Real mu = 4 * nu * nu;
  Real p = 0, q = 0;
  Real term = 1;
  Real smallest = INFINITY;
  for (int k = 0; k < 80; ++k) {
    if (k > 0) term *= (mu - (2.0L * k - 1) * (2.0L * k - 1)) / (k * 8 * x);
    // Terms may grow while (2k-1)^2 < mu; past that, stop at the smallest one.
    const bool past_hump = (2.0L * k - 1) * (2.0L * k - 1) > mu;
    if (past_hump && std::abs(term) > smallest) break;
    if (past_hump) smallest = std::min(smallest, std::abs(term));
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    if (std::abs(term) < 1e-22L) break;
  }
  const Real pi = std::numbers::pi_v<Real>;
  const Real chi = x - (nu / 2 + 0.25L) * pi;
  const Real amp = std::sqrt(2 / (pi * x));
  return {amp * (p * std::cos(chi) - q * std::sin(chi)), amp * (p * std::sin(chi) + q * std::cos(chi))};
}

/// Plain bisection to |b - a| < tol; f(a), f(b) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-14) {
  double fa = f(a);
  for (int i = 0; i < 200 && b - a > tol; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

/// Five-point centred first derivative.
inline double derivative5(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

inline double derivative3(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace oracle
