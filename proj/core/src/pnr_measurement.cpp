#include "personick/pnr_measurement.hpp"

#include <algorithm>
#include <cmath>

#include "personick/fock_closed_forms.hpp"

namespace personick {

namespace {

// Outcome probabilities are polynomials in tau of degree <= N, so a tau rule
// of order (N + 4)/2 is already exact; the root rule keeps this consistent
// with the Personick integrals.
QuadratureRule outcome_rule(const PriorPdf& prior, const NumericPolicy& policy) {
  return make_root_rule(prior, policy.quadrature_order);
}

struct Tables {
  QuadratureRule rule;
  std::vector<RVector> laws;  // laws[i][k] = P(k | tau_i)
};

Tables tabulate(const PureState& state, const PriorPdf& prior, const NumericPolicy& policy) {
  Tables t{outcome_rule(prior, policy), {}};
  const LossExpansion channel(pure_to_density(state));
  t.laws.reserve(t.rule.size());
  for (double tau : t.rule.nodes) t.laws.push_back(channel.diagonal_at(tau));
  return t;
}

ConditionalMean means_from(const Tables& t, const PriorPdf& prior, int dim) {
  ConditionalMean cm;
  cm.pi.assign(dim, 0.0);
  cm.marginal.assign(dim, 0.0);
  std::vector<double> first(dim, 0.0);
  for (std::size_t i = 0; i < t.rule.size(); ++i) {
    for (int k = 0; k < dim; ++k) {
      const double joint = t.rule.weights[i] * t.laws[i][k];
      cm.marginal[k] += joint;
      first[k] += joint * t.rule.nodes[i];
    }
  }
  const double prior_mean = mean(prior);
  for (int k = 0; k < dim; ++k) {
    cm.pi[k] = cm.marginal[k] > 0.0 ? first[k] / cm.marginal[k] : prior_mean;
  }
  return cm;
}

}  // namespace

std::vector<double> outcome_law(const PureState& state, Transmissivity tau) {
  const RVector diag = LossExpansion(pure_to_density(state)).diagonal_at(tau.value());
  return std::vector<double>(diag.data(), diag.data() + diag.size());
}

std::vector<double> outcome_law_inbetween(const InBetweenState& state, Transmissivity tau) {
  const int m = state.ceiling();
  const double t = tau.value();
  const double c2 = state.upper_amplitude() * state.upper_amplitude();
  std::vector<double> law(m + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    // |c|^2 (1-tau)^{m-k} tau^k C(m, m-k)
    const double p1 = c2 * binomial_coefficient(m, m - k) * std::pow(1.0 - t, m - k) * std::pow(t, k);
    // (1-|c|^2) (1-tau)^{m-k-1} tau^k C(m-1, k), with C(m-1, m) = 0
    double p2 = 0.0;
    if (k <= m - 1) {
      p2 = (1.0 - c2) * binomial_coefficient(m - 1, k) * std::pow(1.0 - t, m - k - 1) *
           std::pow(t, k);
    }
    law[k] = p1 + p2;
  }
  return law;
}

ConditionalMean conditional_means(const PureState& state, const PriorPdf& prior,
                                  const NumericPolicy& policy) {
  return means_from(tabulate(state, prior, policy), prior, state.dim());
}

double pnr_mse(const PureState& state, const PriorPdf& prior, const NumericPolicy& policy) {
  const Tables t = tabulate(state, prior, policy);
  const int dim = state.dim();
  const ConditionalMean cm = means_from(t, prior, dim);
  double mse = 0.0;
  for (std::size_t i = 0; i < t.rule.size(); ++i) {
    const double tau = t.rule.nodes[i];
    double inner = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double err = cm.pi[k] - tau;
      inner += t.laws[i][k] * err * err;
    }
    mse += t.rule.weights[i] * inner;
  }
  return mse;
}

}  // namespace personick
