#pragma once

// Bessel functions of real order and the Riccati-Bessel functions built on
// them. All functions are pure and thread-safe.
//
//   u_l(x) = sqrt(pi x / 2) J_{l+1/2}(x)      (regular)
//   v_l(x) = sqrt(pi x / 2) Y_{l+1/2}(x)      (irregular)
//
// With this normalization u_l v_l' - u_l' v_l = 1 for every l.

namespace ctinv {

/// J_nu(x) for nu > -1, x > 0.
double bessel_j(double nu, double x);
/// Y_nu(x) for nu > -1, x > 0.
double bessel_y(double nu, double x);
double bessel_j_prime(double nu, double x);
double bessel_y_prime(double nu, double x);

struct RiccatiValue {
  double value;
  double derivative;
};

/// u_l and u_l' from a single pair of Bessel evaluations. Requires l > -1/2.
RiccatiValue riccati_u_eval(double l, double x);
/// v_l and v_l' from a single pair of Bessel evaluations. Requires l > -1/2.
RiccatiValue riccati_v_eval(double l, double x);

double riccati_u(double l, double x);
double riccati_v(double l, double x);
double riccati_u_prime(double l, double x);
double riccati_v_prime(double l, double x);

/// ln Gamma(z), z > 0.
double log_gamma(double z);

}  // namespace ctinv
