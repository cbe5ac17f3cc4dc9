#include <cmath>
#include <numbers>

#include <doctest.h>

#include "ctinv/oneterm.hpp"
#include "ctinv/verify.hpp"

using namespace ctinv;
using std::numbers::pi;

namespace {

double mod_pi_distance(double a, double b) { return std::abs(std::remainder(a - b, pi)); }

PotentialTable table_for(const BranchParams& branch, double x_start, double x_end) {
  const double h = 1e-2;
  const int points = static_cast<int>(std::ceil((x_end - x_start) / h)) + 1;
  return potential_table(branch, GridSpec{x_start, x_start + (points - 1) * h, points}.nodes());
}

}  // namespace

TEST_CASE("free motion has zero phase shift") {
  for (double l : {0.0, 1.0, 2.5}) {
    const auto r = solve_phase_shift([](double) { return 0.0; }, l);
    CAPTURE(l);
    CHECK(std::abs(r.delta_mod_pi) <= 1e-8);
    CHECK(r.grid_source == "sampler");
    CHECK(r.match_radius == 100.0);
  }
}

TEST_CASE("attractive square well") {
  const double K = std::sqrt(2.0);
  const double expected = std::remainder(-1.0 + std::atan(std::tan(K) / K), pi);
  CHECK(expected == doctest::Approx(0.3511299177).epsilon(1e-9));

  // The step discontinuity at x = 1 limits Numerov to first order in h.
  SolverOptions opts;
  opts.step = 1e-4;
  opts.x_max = 40.0;
  const auto r = solve_phase_shift([](double x) { return x < 1.0 ? -1.0 : 0.0; }, 0.0, opts);
  CHECK(std::abs(r.delta_mod_pi - expected) < 1e-4);
}

TEST_CASE("round trip for the first golden case") {
  const auto branch = select_nonsingular({0.0, 0.780});
  const auto r = solve_phase_shift([&](double x) { return potential_value(branch, x); }, 0.0);
  CHECK(mod_pi_distance(r.delta_mod_pi, 0.780) <= 5e-3);
  CHECK(r.convergence < 5e-3);
  CHECK(r.delta_mod_pi > -pi / 2);
  CHECK(r.delta_mod_pi <= pi / 2);
}

TEST_CASE("table-driven solve matches the sampler") {
  const auto branch = select_nonsingular({0.5, 0.4});
  SolverOptions opts;
  const auto table = table_for(branch, opts.x_start, opts.x_max + 0.1);
  const auto from_table = solve_phase_shift(table, 0.5, opts);
  const auto from_sampler = solve_phase_shift([&](double x) { return potential_value(branch, x); }, 0.5, opts);
  CHECK(from_table.grid_source == "table");
  CHECK(mod_pi_distance(from_table.delta_mod_pi, from_sampler.delta_mod_pi) < 1e-4);
  CHECK(mod_pi_distance(from_table.delta_mod_pi, 0.4) <= 5e-3);

  SolverOptions longer = opts;
  longer.x_max = 150.0;
  CHECK_THROWS_AS(solve_phase_shift(table, 0.5, longer), DomainError);
}

TEST_CASE("halving the step moves delta by less than the convergence estimate") {
  for (const auto& [l, delta] : {std::pair{0.0, 0.780}, {1.0, 1.50}, {0.0, -0.3}}) {
    const auto branch = select_nonsingular({l, delta});
    auto q = [&](double x) { return potential_value(branch, x); };
    SolverOptions coarse;
    SolverOptions fine = coarse;
    fine.step = coarse.step / 2;
    const auto a = solve_phase_shift(q, l, coarse);
    const auto b = solve_phase_shift(q, l, fine);
    CAPTURE(l);
    CHECK(mod_pi_distance(a.delta_mod_pi, b.delta_mod_pi) < std::max(a.convergence, 1e-9));
  }
}

TEST_CASE("match radius independence") {
  for (const auto& [l, delta] : {std::pair{0.0, 0.780}, {1.0, 1.50}, {0.5, 0.4}}) {
    const auto branch = select_nonsingular({l, delta});
    auto q = [&](double x) { return potential_value(branch, x); };
    SolverOptions near_opts;
    SolverOptions far_opts;
    far_opts.x_max = 150.0;
    const auto a = solve_phase_shift(q, l, near_opts);
    const auto b = solve_phase_shift(q, l, far_opts);
    CAPTURE(l);
    CHECK(mod_pi_distance(a.delta_mod_pi, b.delta_mod_pi) < 5e-3);
  }
}

TEST_CASE("solver errors") {
  const auto singular = branch_parameter({0.0, 0.0}, 1);
  CHECK_THROWS_AS(solve_phase_shift([&](double x) { return potential_value(singular, x); }, 0.0), SingularityError);

  const auto table = table_for(singular, 1e-2, 100.2);
  CHECK_THROWS_AS(solve_phase_shift(table, 0.0), SingularityError);

  SolverOptions strict;
  strict.tolerance = 1e-12;
  const auto branch = select_nonsingular({1.0, 1.50});
  CHECK_THROWS_AS(solve_phase_shift([&](double x) { return potential_value(branch, x); }, 1.0, strict),
                  ConvergenceError);

  SolverOptions bad;
  bad.step = -1.0;
  CHECK_THROWS_AS(solve_phase_shift([](double) { return 0.0; }, 0.0, bad), DomainError);
  CHECK_THROWS_AS(solve_phase_shift([](double) { return 0.0; }, -0.5), DomainError);
}

TEST_CASE("pole order estimates") {
  CHECK(pole_order_estimate([](double x) { return 1.0 / ((x - 5) * (x - 5)); }, 5.0) ==
        doctest::Approx(2.0).epsilon(0.005));
  CHECK(pole_order_estimate([](double x) { return 1.0 / (x - 5); }, 5.0) == doctest::Approx(1.0).epsilon(0.01));

  const auto branch = branch_parameter({0.0, 0.0}, 1);
  const double root = find_roots({0.0, 2.0}).roots.front().x;
  const double p = pole_order_estimate([&](double x) { return potential_value(branch, x); }, root);
  CHECK(std::abs(p - 2.0) <= 0.2);

  CHECK_THROWS_AS(pole_order_estimate([](double) { return 1.0; }, 5.0), ConvergenceError);
  CHECK_THROWS_AS(pole_order_estimate([](double x) { return 1.0 / (x - 5); }, 5.0, -1.0), DomainError);
}

TEST_CASE("weighted absolute integral") {
  CHECK(weighted_abs_integral([](double x) { return 1.0 / (x * x * x); }, 1.0, 10.0) ==
        doctest::Approx(0.9).epsilon(1e-10));
  // Excluding |x - 5| < 1 from int_0^10 x dx.
  CHECK(weighted_abs_integral([](double) { return 1.0; }, 0.0, 10.0, {5.0}, 1.0) ==
        doctest::Approx(40.0).epsilon(1e-10));
  // 1/(x-5)^2 loses 2/r per side of the window.
  const double r1 = weighted_abs_integral([](double x) { return 1.0 / ((x - 5) * (x - 5)); }, 4.0, 6.0, {5.0}, 1e-2);
  const double r2 = weighted_abs_integral([](double x) { return 1.0 / ((x - 5) * (x - 5)); }, 4.0, 6.0, {5.0}, 1e-3);
  CHECK(r2 > 9.0 * r1);
}
