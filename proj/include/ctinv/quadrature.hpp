#pragma once

#include <vector>

namespace ctinv {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (n >= 1), nodes from Newton iteration on the
/// three-term recurrence.
GaussRule gauss_legendre(int n);

/// Integrate f over [a, b] with a precomputed rule.
template <class F>
double integrate(const GaussRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

}  // namespace ctinv
