#include "ctinv/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "ctinv/errors.hpp"
#include "ctinv/specfun.hpp"

namespace ctinv {
namespace {

constexpr double kScanStep = std::numbers::pi / 8.0;
constexpr double kZeroTolerance = 1e-9;

double evaluate(ZeroKind kind, double nu, double x) {
  switch (kind) {
    case ZeroKind::J: return bessel_j(nu, x);
    case ZeroKind::Y: return bessel_y(nu, x);
    case ZeroKind::JPrime: return bessel_j_prime(nu, x);
  }
  return 0.0;
}

// Below this point the function keeps its small-x sign: j_{nu,1} > nu,
// y_{nu,1} > nu and j'_{nu,1} > sqrt(nu (nu + 2)).
double scan_start(ZeroKind kind, double nu) {
  const double bound = kind == ZeroKind::JPrime ? std::sqrt(nu * (nu + 2.0)) : nu;
  return std::max(0.5 * bound, kind == ZeroKind::JPrime ? 1e-12 : 1e-3);
}

void check_query(double nu, int n) {
  if (!std::isfinite(nu) || nu <= 0.0) {
    throw DomainError("bessel_zero: order must be positive, got " + std::to_string(nu));
  }
  if (n < 1) throw DomainError("bessel_zero: index must be >= 1");
}

const char* kind_name(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::J: return "J";
    case ZeroKind::Y: return "Y";
    case ZeroKind::JPrime: return "J'";
  }
  return "?";
}

double polish(ZeroKind kind, double nu, double lo, double hi, double f_lo, double f_hi) {
  auto f = [&](double x) { return evaluate(kind, nu, x); };
  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(50), iterations);
  if (iterations >= 200 || !(b - a <= kZeroTolerance)) {
    throw ConvergenceError(std::string("bessel_zero: polish failed for ") + kind_name(kind) +
                           " nu=" + std::to_string(nu) + " near x=" + std::to_string(lo));
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> bessel_zeros(ZeroKind kind, double nu, int count) {
  check_query(nu, count);
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(count));

  double x = scan_start(kind, nu);
  double fx = evaluate(kind, nu, x);
  if (fx == 0.0) {
    throw ConvergenceError("bessel_zero: scan start underflowed for nu=" + std::to_string(nu));
  }
  // Zeros of all three kinds are spaced well above pi/8, so one sign change
  // per step is the most that can occur. The step budget is generous
  // against the McMahon estimate (n + nu/2) pi.
  const double limit = (count + nu / 2.0 + 4.0) * std::numbers::pi + 10.0;
  while (static_cast<int>(zeros.size()) < count) {
    const double next = x + kScanStep;
    if (next > limit) {
      throw ConvergenceError(std::string("bessel_zero: scan ran past x=") + std::to_string(limit) +
                             " for " + kind_name(kind) + " nu=" + std::to_string(nu));
    }
    const double f_next = evaluate(kind, nu, next);
    if (f_next == 0.0) {
      zeros.push_back(next);
      x = next + 1e-9;
      fx = evaluate(kind, nu, x);
      continue;
    }
    if (std::signbit(fx) != std::signbit(f_next)) {
      zeros.push_back(polish(kind, nu, x, next, fx, f_next));
    }
    x = next;
    fx = f_next;
  }
  return zeros;
}

double bessel_zero(const ZeroQuery& query) {
  check_query(query.nu, query.n);
  return bessel_zeros(query.kind, query.nu, query.n).back();
}

InterlaceReport interlace_scan(double l, double L, int count) {
  if (!(l < L)) throw DomainError("interlace_scan: requires l < L");
  if (count < 1) throw DomainError("interlace_scan: count must be >= 1");
  const auto y = bessel_zeros(ZeroKind::Y, l + 0.5, count + 1);
  const auto j = bessel_zeros(ZeroKind::J, L + 0.5, count);

  InterlaceReport report{l, L, count, {}, std::nullopt};
  report.regular.reserve(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const bool regular = y[i] < j[i] && j[i] < y[i + 1];
    report.regular.push_back(regular);
    if (!regular && !report.first_irregular) report.first_irregular = n;
  }
  return report;
}

double proposition_margin(double nu, int n) {
  check_query(nu, n);
  const double j_next_order = bessel_zeros(ZeroKind::J, nu + 1.0, n).back();
  const double jp = bessel_zeros(ZeroKind::JPrime, nu, n + 1).back();
  return jp - j_next_order;
}

bool check_proposition(double nu, int n) {
  return proposition_margin(nu, n) > kZeroTolerance;
}

}  // namespace ctinv
