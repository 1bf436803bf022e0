#pragma once

#include <array>
#include <vector>

#include "personick/priors.hpp"

namespace personick {

/// e_l^{(n)}(tau) = C(n, l) tau^{n-l} (1-tau)^l: probability that l of n photons are lost.
double binomial_loss(int n, int l, double tau);

/// C(n, k); log-space above n = 30.
double binomial_coefficient(int n, int k);

/// MMSE of |n> under q delta(tau-tau0) + (1-q) delta(tau-tau1).
double fock_mmse_twopoint(int n, double q, double tau0, double tau1);

/// Eigenvalue b_l of B on |n-l><n-l|, l = 0..n.
std::vector<double> fock_b_eigenvalues_twopoint(int n, double q, double tau0, double tau1);

/// alpha beta / [(alpha+beta)(alpha+beta+1)(alpha+beta+nbar)].
double fock_mmse_beta(double nbar, double alpha, double beta);

/// g[l][k] = int P(tau) tau^k e_l^{(n)}(tau), k = 0, 1, 2.
struct GenericPriorFunctionals {
  int n = 0;
  std::vector<std::array<double, 3>> g;
};

GenericPriorFunctionals generic_prior_functionals(int n, const PriorPdf& prior);

/// sum_l [ g_l^{(n,2)} - (g_l^{(n,1)})^2 / g_l^{(n,0)} ], skipping g_l^{(n,0)} = 0.
double fock_mmse_generic(int n, const PriorPdf& prior);

/// g_l^{(n,1)} / g_l^{(n,0)} per projector |n-l><n-l|; prior mean where g_l^{(n,0)} = 0.
std::vector<double> fock_b_eigenvalues_generic(int n, const PriorPdf& prior);

}  // namespace personick
