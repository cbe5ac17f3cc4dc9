// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "ctinv/oneterm.hpp"
#include "ctinv/specfun.hpp"
#include "ctinv/verify.hpp"
#include "ctinv/wronskian.hpp"
#include "ctinv/zeros.hpp"

using namespace ctinv;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome branch_map() {
  const auto a = branch_parameter({0.0, 0.780}, 0);
  const auto b = branch_parameter({1.0, 1.50}, 0);
  const bool ok = std::abs(a.L - (-0.497)) <= 5e-4 && std::abs(b.L - 0.045) <= 5e-4;
  return {ok, fmt("L(0,0.780)=%.6f L(1,1.50)=%.6f", a.L, b.L)};
}

Outcome theorem_sweep() {
  int pairs = 0, bad = 0;
  for (int i = 0; i <= 20; ++i) {
    for (int k = 0; k <= 20; ++k) {
      if (i == k) continue;
      const double l = 0.25 * i, L = 0.25 * k;
      const auto profile = find_roots(PairParams::create(l, L), 100.0);
      const double gap = std::abs(l - L);
      bool ok = gap <= 1.0 ? profile.roots.empty() : !profile.roots.empty();
      const double phase = std::fmod(std::fmod(l - L - 1.0, 4.0) + 4.0, 4.0);
      if (phase > 0.0 && phase < 2.0) ok = ok && profile.sign_origin > 0 && profile.limit_infinity < 0.0;
      ++pairs;
      if (!ok) {
        ++bad;
        std::printf("  theorem mismatch l=%.2f L=%.2f roots=%zu\n", l, L, profile.roots.size());
      }
    }
  }
  return {bad == 0, fmt("%d pairs, %d mismatches", pairs, bad)};
}

Outcome proposition_sweep() {
  double worst = INFINITY;
  int broken = 0;
  for (int i = 1; i <= 100; ++i) {
    const double nu = 0.1 * i;
    const auto j = bessel_zeros(ZeroKind::J, nu, 21);
    const auto j1 = bessel_zeros(ZeroKind::J, nu + 1.0, 20);
    const auto jp = bessel_zeros(ZeroKind::JPrime, nu, 21);
    const auto y = bessel_zeros(ZeroKind::Y, nu, 21);
    for (std::size_t n = 0; n < 20; ++n) {
      worst = std::min(worst, jp[n + 1] - j1[n]);
      if (!(j[n] < j1[n] && j1[n] < jp[n + 1] && jp[n + 1] < j[n + 1] && j1[n] < y[n + 1])) ++broken;
    }
  }
  return {worst > 1e-6 && broken == 0, fmt("min margin %.6e, broken chains %d", worst, broken)};
}

Outcome specfun_identities() {
  double worst_riccati = 0.0, worst_cross = 0.0;
  for (int i = 0; i <= 104; ++i) {
    const double l = -0.4 + 0.1 * i + 1e-9;  // (-0.4, 10]
    const double nu = l + 0.5;
    for (int k = 0; k <= 200; ++k) {
      const double x = std::pow(10.0, -3.0 + 5.0 * k / 200.0);  // [1e-3, 100]
      const auto u = riccati_u_eval(l, x), v = riccati_v_eval(l, x);
      worst_riccati = std::max(worst_riccati, std::abs(u.value * v.derivative - u.derivative * v.value - 1.0));
      const double expected = 2.0 / (pi * x);
      const double w = bessel_j(nu, x) * bessel_y_prime(nu, x) - bessel_j_prime(nu, x) * bessel_y(nu, x);
      worst_cross = std::max(worst_cross, std::abs(w - expected) / expected);
    }
  }
  return {worst_riccati <= 1e-9 && worst_cross <= 1e-9,
          fmt("max |uv'-u'v-1| %.3e, max cross-Wronskian rel. error %.3e", worst_riccati, worst_cross)};
}

Outcome residual_grid() {
  double worst = 0.0;
  for (const auto& [l, L] : {std::pair{0.0, -0.4966}, {1.0, 0.0451}}) {
    const BranchParams b{{l, 0.0}, 0, L, l * (l + 1) - L * (L + 1), false};
    for (int i = 1; i <= 10; ++i) {
      for (int k = 1; k <= 10; ++k) {
        const double x = i, y = x * k / 10.0;
        const double r = residual_integral_equation(b, x, y, 64);
        worst = std::max(worst, std::abs(r) / (1.0 + std::abs(kernel_K(b, x, y))));
      }
    }
  }
  return {worst <= 1e-6, fmt("max |residual|/(1+|K|) %.3e", worst)};
}

Outcome round_trip() {
  double worst = 0.0;
  std::string detail;
  for (const auto& [l, delta] : {std::pair{0.0, 0.780}, {1.0, 1.50}, {0.0, -0.3}, {0.5, 0.4}}) {
    const auto branch = select_nonsingular({l, delta});
    SolverOptions opts;
    const double h = 1e-2;
    const int points = static_cast<int>(std::ceil((opts.x_max + 0.1 - opts.x_start) / h)) + 1;
    const auto grid = GridSpec{opts.x_start, opts.x_start + (points - 1) * h, points}.nodes();
    const auto result = solve_phase_shift(potential_table(branch, grid), l, opts);
    const double dev = std::abs(std::remainder(result.delta_mod_pi - delta, pi));
    worst = std::max(worst, dev);
    detail += fmt("(%g,%g)->%.6f ", l, delta, result.delta_mod_pi);
  }
  return {worst <= 5e-3, detail + fmt("max deviation %.3e", worst)};
}

Outcome degenerate_limit() {
  const auto branch = select_nonsingular({0.0, 0.0});
  double sup = 0.0;
  for (int i = 0; i <= 19900; ++i) sup = std::max(sup, std::abs(potential_value(branch, 0.1 + 1e-3 * i)));
  const bool ok = branch.degenerate && branch.L == -1e-6 && sup <= 1e-4;
  return {ok, fmt("L=%.1e sup|q| on [0.1,20] = %.3e", branch.L, sup)};
}

Outcome singular_branch() {
  const auto branch = branch_parameter({0.0, 0.0}, 1);
  const auto profile = find_roots({0.0, branch.L}, 100.0);
  if (profile.roots.empty()) return {false, "no Wronskian root found"};
  const double root = profile.roots.front().x;
  auto q = [&](double x) { return potential_value(branch, x); };
  const double order = pole_order_estimate(q, root);
  std::vector<double> totals;
  bool monotone = true;
  for (double r : {1e-2, 1e-3, 1e-4, 1e-5}) {
    totals.push_back(weighted_abs_integral(q, 1e-3, 20.0, {root}, r));
    if (totals.size() > 1) monotone = monotone && totals.back() > totals[totals.size() - 2];
  }
  const bool ok = std::abs(order - 2.0) <= 0.2 && monotone;
  return {ok, fmt("%zu roots, first %.9f, pole order %.4f, int x|q| %.3e %.3e %.3e %.3e", profile.roots.size(),
                  root, order, totals[0], totals[1], totals[2], totals[3])};
}

Outcome two_singularities() {
  const PairParams pair = PairParams::create(1.0, 4.0451);
  const auto within = find_roots(pair, 100.0);
  const auto extended = find_roots(pair, 200.0);
  std::string roots;
  for (const auto& r : extended.roots) roots += fmt(" %.4f", r.x);
  return {within.roots.size() >= 2, fmt("%zu roots on (0,100]; on (0,200]:%s", within.roots.size(), roots.c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 branch map", branch_map},
      {"2 theorem sweep", theorem_sweep},
      {"3 proposition sweep", proposition_sweep},
      {"4 special-function identities", specfun_identities},
      {"5 integral-equation residual", residual_grid},
      {"6 round trip", round_trip},
      {"7 degenerate limit", degenerate_limit},
      {"8 singular branch", singular_branch},
      {"9 two singularities", two_singularities},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  [%s] %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    if (!o.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
