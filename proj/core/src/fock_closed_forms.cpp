#include "personick/fock_closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace personick {

namespace {

constexpr int kExactBinomialLimit = 30;

void require_n(int n) {
  if (n < 0) throw std::invalid_argument("photon number must be >= 0");
}

}  // namespace

double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n > kExactBinomialLimit) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
  }
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double binomial_loss(int n, int l, double tau) {
  if (l < 0 || l > n) return 0.0;
  if (tau <= 0.0) return l == n ? 1.0 : 0.0;
  if (tau >= 1.0) return l == 0 ? 1.0 : 0.0;
  if (n > kExactBinomialLimit) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(l + 1.0) - std::lgamma(n - l + 1.0) +
                    (n - l) * std::log(tau) + l * std::log1p(-tau));
  }
  return binomial_coefficient(n, l) * std::pow(tau, n - l) * std::pow(1.0 - tau, l);
}

double fock_mmse_twopoint(int n, double q, double tau0, double tau1) {
  require_n(n);
  const PriorPdf prior = PriorPdf::two_point(q, tau0, tau1);
  if (prior.is_delta()) return 0.0;
  double sigma = 0.0;
  for (int l = 0; l <= n; ++l) {
    const double e0 = binomial_loss(n, l, tau0);
    const double e1 = binomial_loss(n, l, tau1);
    const double den = q * e0 + (1.0 - q) * e1;
    if (den <= 0.0) continue;
    const double num = q * tau0 * e0 + (1.0 - q) * tau1 * e1;
    sigma += num * num / den;
  }
  return q * tau0 * tau0 + (1.0 - q) * tau1 * tau1 - sigma;
}

std::vector<double> fock_b_eigenvalues_twopoint(int n, double q, double tau0, double tau1) {
  require_n(n);
  const PriorPdf prior = PriorPdf::two_point(q, tau0, tau1);
  if (const auto* d = prior.as<DeltaPrior>()) return std::vector<double>(n + 1, d->tau0);
  const double prior_mean = q * tau0 + (1.0 - q) * tau1;
  std::vector<double> b(n + 1);
  for (int l = 0; l <= n; ++l) {
    const double e0 = binomial_loss(n, l, tau0);
    const double e1 = binomial_loss(n, l, tau1);
    const double den = q * e0 + (1.0 - q) * e1;
    b[l] = den > 0.0 ? (q * tau0 * e0 + (1.0 - q) * tau1 * e1) / den : prior_mean;
  }
  return b;
}

double fock_mmse_beta(double nbar, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !(nbar >= 0.0)) {
    throw std::invalid_argument("fock_mmse_beta: need alpha, beta > 0 and nbar >= 0");
  }
  const double s = alpha + beta;
  return alpha * beta / (s * (s + 1.0) * (s + nbar));
}

GenericPriorFunctionals generic_prior_functionals(int n, const PriorPdf& prior) {
  require_n(n);
  // Integrands are polynomials of degree n + 2 in tau.
  const QuadratureRule rule = make_rule(prior, std::max(64, n / 2 + 4));
  GenericPriorFunctionals out;
  out.n = n;
  out.g.assign(n + 1, {0.0, 0.0, 0.0});
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double tau = rule.nodes[i];
    const double w = rule.weights[i];
    for (int l = 0; l <= n; ++l) {
      const double e = w * binomial_loss(n, l, tau);
      out.g[l][0] += e;
      out.g[l][1] += e * tau;
      out.g[l][2] += e * tau * tau;
    }
  }
  return out;
}

double fock_mmse_generic(int n, const PriorPdf& prior) {
  if (prior.is_delta()) return 0.0;
  const GenericPriorFunctionals f = generic_prior_functionals(n, prior);
  double delta = 0.0;
  for (const auto& g : f.g) {
    delta += g[2];
    if (g[0] > 0.0) delta -= g[1] * g[1] / g[0];
  }
  return delta;
}

std::vector<double> fock_b_eigenvalues_generic(int n, const PriorPdf& prior) {
  const GenericPriorFunctionals f = generic_prior_functionals(n, prior);
  const double prior_mean = mean(prior);
  std::vector<double> b(n + 1);
  for (int l = 0; l <= n; ++l) {
    const auto& g = f.g[l];
    b[l] = g[0] > 0.0 ? g[1] / g[0] : prior_mean;
  }
  return b;
}

}  // namespace personick
