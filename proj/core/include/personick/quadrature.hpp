#pragma once

#include <vector>

namespace personick {

/// Nodes and weights on [0, 1]; sum_i w_i f(x_i) approximates an integral
/// against whatever measure the rule was built for.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0) * 1.0) {
    decltype(f(0.0) * 1.0) total{};
    for (std::size_t i = 0; i < nodes.size(); ++i) total += weights[i] * f(nodes[i]);
    return total;
  }
};

/// Gauss-Jacobi rule for the normalized weight x^{a}(1-x)^{b} / B(a+1, b+1)
/// on [0, 1] (Golub-Welsch). Exact for polynomials of degree <= 2*order - 1.
/// Requires a, b > -1.
QuadratureRule gauss_jacobi01(int order, double a, double b);

/// Gauss-Legendre on [0, 1], weights summing to 1.
inline QuadratureRule gauss_legendre01(int order) { return gauss_jacobi01(order, 0.0, 0.0); }

}  // namespace personick
