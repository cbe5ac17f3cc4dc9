#include "ctinv/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "ctinv/errors.hpp"

namespace ctinv {
namespace {

void check_argument(double nu, double x, const char* who) {
  if (!std::isfinite(nu) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": non-finite argument");
  }
  if (x <= 0.0) {
    throw DomainError(std::string(who) + ": x must be positive, got " + std::to_string(x));
  }
  if (nu <= -1.0) {
    throw DomainError(std::string(who) + ": order must exceed -1, got " + std::to_string(nu));
  }
}

void check_angular_momentum(double l, double x, const char* who) {
  if (!(l > -0.5)) {
    throw DomainError(std::string(who) + ": l must exceed -1/2, got " + std::to_string(l));
  }
  check_argument(l + 0.5, x, who);
}

// libstdc++ only accepts nu >= 0; negative orders in (-1, 0) are reached
// with C_nu = (2(nu+1)/x) C_{nu+1} - C_{nu+2}, valid for J and Y alike.
template <class F>
double cylinder(F&& nonnegative, double nu, double x) {
  if (nu >= 0.0) return nonnegative(nu, x);
  return 2.0 * (nu + 1.0) / x * nonnegative(nu + 1.0, x) - nonnegative(nu + 2.0, x);
}

double j_raw(double nu, double x) {
  return cylinder([](double n, double t) { return std::cyl_bessel_j(n, t); }, nu, x);
}

double y_raw(double nu, double x) {
  return cylinder([](double n, double t) { return std::cyl_neumann(n, t); }, nu, x);
}

// u = s * J, u' = s * (J' + J / (2x)) = s * ((l + 1)/x J_nu - J_{nu+1}), s = sqrt(pi x / 2).
template <class F>
RiccatiValue riccati(F&& cyl, double l, double x) {
  const double nu = l + 0.5;
  const double s = std::sqrt(std::numbers::pi * x / 2.0);
  const double f = cyl(nu, x);
  const double f_next = cyl(nu + 1.0, x);
  return {s * f, s * ((l + 1.0) / x * f - f_next)};
}

}  // namespace

double bessel_j(double nu, double x) {
  check_argument(nu, x, "bessel_j");
  return j_raw(nu, x);
}

double bessel_y(double nu, double x) {
  check_argument(nu, x, "bessel_y");
  return y_raw(nu, x);
}

double bessel_j_prime(double nu, double x) {
  check_argument(nu, x, "bessel_j_prime");
  return nu / x * j_raw(nu, x) - j_raw(nu + 1.0, x);
}

double bessel_y_prime(double nu, double x) {
  check_argument(nu, x, "bessel_y_prime");
  return nu / x * y_raw(nu, x) - y_raw(nu + 1.0, x);
}

RiccatiValue riccati_u_eval(double l, double x) {
  check_angular_momentum(l, x, "riccati_u");
  return riccati(j_raw, l, x);
}

RiccatiValue riccati_v_eval(double l, double x) {
  check_angular_momentum(l, x, "riccati_v");
  return riccati(y_raw, l, x);
}

double riccati_u(double l, double x) { return riccati_u_eval(l, x).value; }
double riccati_v(double l, double x) { return riccati_v_eval(l, x).value; }
double riccati_u_prime(double l, double x) { return riccati_u_eval(l, x).derivative; }
double riccati_v_prime(double l, double x) { return riccati_v_eval(l, x).derivative; }

double log_gamma(double z) {
  if (!std::isfinite(z) || z <= 0.0) {
    throw DomainError("log_gamma: argument must be positive and finite");
  }
  return boost::math::lgamma(z);
}

}  // namespace ctinv
