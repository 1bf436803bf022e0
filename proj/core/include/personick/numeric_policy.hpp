#pragma once

namespace personick {

/// Tolerances shared by every module. Functions that need one take a
/// `const NumericPolicy&` defaulting to `kDefaultPolicy`.
struct NumericPolicy {
  /// Normalization and Hermiticity tolerance for constructed states.
  double construction_tol = 1e-12;
  /// Tolerance for derived quantities (traces, eigenvalue floors).
  double derived_tol = 1e-10;
  /// Eigenvalues of Gamma0 below `null_rel * max eigenvalue` span its null space.
  double null_rel = 1e-12;
  /// Gamma1 weight outside Gamma0's support above this is reported as ill-posed.
  double ill_posed_tol = 1e-10;
  /// Starting quadrature order for continuous priors.
  int quadrature_order = 200;
  /// Orders are doubled until successive MMSE values differ by less than this.
  double quadrature_converge_tol = 1e-10;
  /// Hard ceiling for adaptive doubling.
  int quadrature_max_order = 3200;
};

inline constexpr NumericPolicy kDefaultPolicy{};

}  // namespace personick
