#pragma once

#include <vector>

#include "personick/fock_core.hpp"
#include "personick/loss_channel.hpp"
#include "personick/numeric_policy.hpp"
#include "personick/priors.hpp"

namespace personick {

/// P(k | tau) = <k| rho(tau) |k>, k = 0..N, from the channel output diagonal.
std::vector<double> outcome_law(const PureState& state, Transmissivity tau);

/// Binomial closed form of P(k | tau) for an in-between input, k = 0..ceil(nbar).
std::vector<double> outcome_law_inbetween(const InBetweenState& state, Transmissivity tau);

/// Bayes conditional-mean estimates Pi_k = E[tau | k] for photon counting.
struct ConditionalMean {
  std::vector<double> pi;
  /// Marginal probability of each outcome; Pi_k is the prior mean where it is 0.
  std::vector<double> marginal;
};

ConditionalMean conditional_means(const PureState& state, const PriorPdf& prior,
                                  const NumericPolicy& policy = kDefaultPolicy);

/// Mean square error of photon counting followed by the conditional-mean
/// estimator: int P(tau) sum_k P(k|tau) (Pi_k - tau)^2 dtau.
double pnr_mse(const PureState& state, const PriorPdf& prior,
               const NumericPolicy& policy = kDefaultPolicy);

}  // namespace personick
