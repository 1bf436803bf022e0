#pragma once

#include "personick/priors.hpp"

namespace personick {

/// Quantum Fisher information of |n> for tau: n / (tau (1 - tau)).
/// Attained by photon counting. Divergent at tau in {0, 1} when n > 0.
MaybeDivergent qfi_fock(int n, double tau);

/// J_E^{-1} = int P(tau) / F(tau) for a Fock probe |n>.
MaybeDivergent je_inv(int n, const PriorPdf& prior);

/// J_D = int P(tau) F(tau) for a Fock probe |n>.
MaybeDivergent jd(int n, const PriorPdf& prior);

/// J_B = J_D + J_P. For Beta priors with alpha, beta > 2 this is the closed form
///   C'(alpha,beta) [n (alpha-2)(beta-2) + (alpha-1)(beta-1)(alpha+beta-4)],
///   C' = (alpha+beta-1)(alpha+beta-2) / [(alpha-1)(beta-1)(alpha-2)(beta-2)].
MaybeDivergent jb(int n, const PriorPdf& prior);

/// The Beta closed form with prefactor B(alpha-2, beta-2)/B(alpha, beta) as
/// commonly printed; it equals (alpha+beta-3)(alpha+beta-4) * jb. Kept for
/// comparison only.
double jb_beta_as_printed(int n, double alpha, double beta);

struct BoundsReport {
  MaybeDivergent je_inv = MaybeDivergent::divergent();
  MaybeDivergent jd = MaybeDivergent::divergent();
  MaybeDivergent jp = MaybeDivergent::divergent();
  MaybeDivergent jb = MaybeDivergent::divergent();
  MaybeDivergent jd_inv = MaybeDivergent::divergent();
  MaybeDivergent jb_inv = MaybeDivergent::divergent();
};

BoundsReport fisher_report(int n, const PriorPdf& prior);

}  // namespace personick
