#pragma once

#include "personick/fock_core.hpp"
#include "personick/numeric_policy.hpp"
#include "personick/priors.hpp"

namespace personick {

/// Prior-weighted output moments Gamma_k = int P(tau) tau^k rho(tau) dtau and,
/// once solved, the Hermitian B whose eigenvectors give the optimal
/// projective measurement.
struct PersonickSet {
  CMatrix gamma0;
  CMatrix gamma1;
  CMatrix gamma2;
  CMatrix b_op;
  int support_dim = 0;
  double commutator_g01 = 0.0;
  /// Set when Gamma1 has weight outside Gamma0's support.
  bool ill_posed = false;
  double ill_posed_weight = 0.0;
  int quadrature_order = 0;
  bool has_b = false;
};

/// Eigen-decomposition of Gamma0 reused by solve_b and mmse_lower_bound.
struct Gamma0Basis {
  RVector eigenvalues;
  CMatrix eigenvectors;
  double null_threshold = 0.0;
};

Gamma0Basis decompose_gamma0(const CMatrix& gamma0, const NumericPolicy& policy = kDefaultPolicy);

/// Assembles Gamma_0..2 by quadrature over the Kraus outputs. Discrete priors
/// use their exact point masses; `order` is ignored for them.
PersonickSet build_gammas(const PureState& state, const PriorPdf& prior, int order,
                          const NumericPolicy& policy = kDefaultPolicy);

/// Solves Gamma0 B + B Gamma0 = 2 Gamma1 in Gamma0's eigenbasis:
/// B~_ij = 2 Gamma1~_ij / (lambda_i + lambda_j), zero where the pair is null.
/// Returns `gammas` with b_op, ill_posed and ill_posed_weight filled in.
PersonickSet solve_b(PersonickSet gammas, const NumericPolicy& policy = kDefaultPolicy);

/// tr Gamma2 - tr(Gamma0^+ Gamma1^2), pseudo-inverse on Gamma0's support.
double mmse_lower_bound(const PersonickSet& gammas, const PriorPdf& prior,
                        const NumericPolicy& policy = kDefaultPolicy);

struct MmseReport {
  double delta = 0.0;
  double delta_lb = 0.0;
  double tr_gamma2 = 0.0;
  double tr_b_gamma1 = 0.0;
  double commutator_g01 = 0.0;
  /// Eigenvalues of B (ascending) and the matching eigenvectors as columns:
  /// the optimal projective measurement and its estimator values.
  RVector b_eigenvalues;
  CMatrix b_eigenvectors;
  bool ill_posed = false;
  double ill_posed_weight = 0.0;
  int quadrature_order = 0;
  bool quadrature_converged = true;
};

/// Attainable MMSE delta = tr Gamma2 - tr(B Gamma1). Continuous priors start
/// at policy.quadrature_order and double until successive deltas agree to
/// policy.quadrature_converge_tol.
MmseReport mmse(const PureState& state, const PriorPdf& prior,
                const NumericPolicy& policy = kDefaultPolicy);

/// Full Personick set (Gammas and B) at the order mmse() converged to.
PersonickSet personick_set(const PureState& state, const PriorPdf& prior,
                           const NumericPolicy& policy = kDefaultPolicy);

}  // namespace personick
