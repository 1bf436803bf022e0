#include "personick/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>

namespace personick {

namespace {

QuadratureRule golub_welsch(int order, double a, double b) {
  // Jacobi weight on [-1, 1] is (1-y)^alpha (1+y)^beta; x = (1+y)/2 maps
  // x^a (1-x)^b onto alpha = b, beta = a.
  const double alpha = b;
  const double beta = a;
  const double ab = alpha + beta;

  Eigen::VectorXd diag(order);
  Eigen::VectorXd offdiag(std::max(order - 1, 0));
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < order; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < order; ++k) {
    const double s = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    offdiag[k - 1] = std::sqrt(b2);
  }

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  if (order == 1) {
    rule.nodes[0] = 0.5 * (1.0 + diag[0]);
    rule.weights[0] = 1.0;
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi01: tridiagonal eigensolver failed");
  }
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = std::clamp(0.5 * (1.0 + eig.eigenvalues()[i]), 0.0, 1.0);
    const double v0 = eig.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;
  }
  const double total = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
  for (double& w : rule.weights) w /= total;
  return rule;
}

// Rules are pure functions of (order, a, b); building one costs an
// order x order eigen-decomposition, so finished rules are memoized.
class RuleCache {
 public:
  QuadratureRule get(int order, double a, double b) {
    const Key key{order, a, b};
    {
      std::lock_guard lock(mutex_);
      if (auto it = rules_.find(key); it != rules_.end()) return it->second;
    }
    QuadratureRule rule = golub_welsch(order, a, b);
    std::lock_guard lock(mutex_);
    if (rules_.size() >= kCapacity) rules_.clear();
    return rules_.emplace(key, std::move(rule)).first->second;
  }

 private:
  using Key = std::tuple<int, double, double>;
  static constexpr std::size_t kCapacity = 256;
  std::mutex mutex_;
  std::map<Key, QuadratureRule> rules_;
};

}  // namespace

QuadratureRule gauss_jacobi01(int order, double a, double b) {
  static RuleCache cache;
  if (order < 1) throw std::invalid_argument("gauss_jacobi01: order must be >= 1");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw std::invalid_argument("gauss_jacobi01: exponents must exceed -1");
  }
  return cache.get(order, a, b);
}

}  // namespace personick
