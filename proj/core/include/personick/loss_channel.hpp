#pragma once

#include <vector>

#include "personick/fock_core.hpp"

namespace personick {

/// Power transmissivity tau = exp(-gamma t) in [0, 1].
class Transmissivity {
 public:
  explicit Transmissivity(double tau);
  double value() const { return tau_; }

 private:
  double tau_;
};

/// exp(A^(l) t) for the l-th off-diagonal ladder c^(l) = (c_{l,0}, c_{l+1,1}, ...).
struct LadderPropagator {
  int l = 0;
  RMatrix matrix;
};

/// Pure-loss output via the Kraus sum
///   rho(tau) = sum_{l=0}^{N} (1-tau)^l / l! * tau^{n/2} a^l rho0 a^{dag l} tau^{n/2}.
DensityMatrix apply_kraus(const DensityMatrix& rho0, Transmissivity tau);

/// Closed-form propagator of the l-th ladder block:
///   [i][j] = tau^{l/2 + i} (1-tau)^{j-i} / (j-i)! * prod_{r=i+1}^{j} sqrt(r (l + r)),  j >= i
/// (0-based indices).
LadderPropagator ladder_propagator(int l, Transmissivity tau, int dim);

/// Pure-loss output by evolving each ladder c^(l) with its propagator.
DensityMatrix apply_ladder(const DensityMatrix& rho0, Transmissivity tau);

/// Kraus sum with the tau-independent terms a^l rho0 a^{dag l} / l! precomputed,
/// for repeated evaluation over quadrature nodes.
class LossExpansion {
 public:
  explicit LossExpansion(const DensityMatrix& rho0);

  int dim() const { return dim_; }
  CMatrix at(double tau) const;
  /// Only the diagonal <k|rho(tau)|k>.
  RVector diagonal_at(double tau) const;

 private:
  int dim_;
  std::vector<CMatrix> terms_;
};

}  // namespace personick
