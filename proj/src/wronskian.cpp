#include "ctinv/wronskian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "ctinv/errors.hpp"
#include "ctinv/specfun.hpp"

namespace ctinv {
namespace {

constexpr double kTangencyThreshold = 1e-12;

void check_orders(double l, double L) {
  if (!(l > -0.5) || !(L > -0.5) || !std::isfinite(l) || !std::isfinite(L)) {
    throw DomainError("PairParams: l and L must be finite and exceed -1/2");
  }
}

}  // namespace

PairParams PairParams::create(double l, double L) {
  check_orders(l, L);
  if (l == L) throw DomainError("PairParams: l and L must differ");
  return {l, L};
}

double riccati_wronskian(double l, double L, double x) {
  const auto u = riccati_u_eval(L, x);
  const auto v = riccati_v_eval(l, x);
  return u.value * v.derivative - u.derivative * v.value;
}

double wronskian(const PairParams& pair, double x) {
  return riccati_wronskian(pair.l, pair.L, x);
}

OriginAsymptote origin_coefficient(const PairParams& pair) {
  check_orders(pair.l, pair.L);
  const double l = pair.l;
  const double L = pair.L;
  const double log_c = (l - L - 1.0) * std::log(2.0) + std::log(L + l + 1.0) +
                       log_gamma(l + 0.5) - log_gamma(L + 1.5);
  return {std::exp(log_c), L - l};
}

double infinity_limit(const PairParams& pair) {
  return std::cos((pair.l - pair.L) * std::numbers::pi / 2.0);
}

bool is_nonsingular_pair(const PairParams& pair) {
  const double gap = std::abs(pair.L - pair.l);
  return gap > 0.0 && gap <= 1.0;
}

WronskianProfile find_roots(const PairParams& pair, double x_max, double step) {
  check_orders(pair.l, pair.L);
  if (!(x_max > 0.0) || !std::isfinite(x_max)) {
    throw DomainError("find_roots: x_max must be positive and finite");
  }
  if (!(step > 0.0) || step > kDefaultRootScanStep) {
    throw DomainError("find_roots: step must lie in (0, pi/8]");
  }

  WronskianProfile profile;
  profile.pair = pair;
  profile.x_max = x_max;
  profile.step = step;
  profile.sign_origin = origin_coefficient(pair).coefficient > 0.0 ? 1 : -1;
  profile.limit_infinity = infinity_limit(pair);

  const auto count = static_cast<std::size_t>(std::ceil(x_max / step - 1e-12));
  profile.samples.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const double x = std::min(static_cast<double>(i) * step, x_max);
    profile.samples.push_back({x, wronskian(pair, x)});
  }

  auto w = [&pair](double x) { return wronskian(pair, x); };
  auto add_root = [&](double lo, double hi, double w_lo, double w_hi) {
    std::uintmax_t iterations = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(
        w, lo, hi, w_lo, w_hi, boost::math::tools::eps_tolerance<double>(48), iterations);
    profile.roots.push_back({0.5 * (a + b), lo, hi, iterations < 200 && (b - a) <= 1e-9});
  };

  // Below the first sample the sign is that of the origin asymptote; walk
  // towards 0 until W takes it, then bracket.
  const auto& first = profile.samples.front();
  if (first.w != 0.0 && (first.w > 0.0 ? 1 : -1) != profile.sign_origin) {
    double lo = first.x;
    double w_lo = first.w;
    while (lo > 1e-8 && (w_lo > 0.0 ? 1 : -1) != profile.sign_origin) {
      lo *= 0.5;
      w_lo = w(lo);
    }
    if ((w_lo > 0.0 ? 1 : -1) == profile.sign_origin) add_root(lo, first.x, w_lo, first.w);
  }

  const auto& s = profile.samples;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].w == 0.0) {
      profile.roots.push_back({s[i].x, s[i].x, s[i].x, true});
      continue;
    }
    if (s[i + 1].w != 0.0 && std::signbit(s[i].w) != std::signbit(s[i + 1].w)) {
      add_root(s[i].x, s[i + 1].x, s[i].w, s[i + 1].w);
    }
  }

  // Tangency: local minima of |W| without a sign change.
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double a = std::abs(s[i - 1].w), b = std::abs(s[i].w), c = std::abs(s[i + 1].w);
    if (b > 0.5 * std::min(a, c)) continue;
    if (std::signbit(s[i - 1].w) != std::signbit(s[i].w) ||
        std::signbit(s[i].w) != std::signbit(s[i + 1].w)) {
      continue;
    }
    std::uintmax_t iterations = 100;
    const auto [x_min, w_min] = boost::math::tools::brent_find_minima(
        [&](double x) { return std::abs(w(x)); }, s[i - 1].x, s[i + 1].x, 40, iterations);
    if (w_min < kTangencyThreshold) profile.tangency_warnings.push_back(x_min);
  }
  return profile;
}

}  // namespace ctinv
