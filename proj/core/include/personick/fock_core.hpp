#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "personick/numeric_policy.hpp"

namespace personick {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pure state over the truncated Fock basis |0>..|N>.
class PureState {
 public:
  /// Validates normalization to `policy.construction_tol`.
  explicit PureState(CVector amps, const NumericPolicy& policy = kDefaultPolicy);

  /// Rescales `amps` to unit norm. Throws on a zero vector.
  static PureState normalized(CVector amps);

  int cutoff() const { return static_cast<int>(amps_.size()) - 1; }
  int dim() const { return static_cast<int>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }

  /// Sum_n n |d_n|^2.
  double mean_photon() const;

  /// Zero-pads to a larger cutoff. Never truncates.
  PureState padded(int cutoff) const;

  /// exp(i phi n) |psi>.
  PureState phase_rotated(double phi) const;

 private:
  CVector amps_;
};

class DensityMatrix {
 public:
  /// Checks Hermiticity, unit trace and positivity against `policy`.
  explicit DensityMatrix(CMatrix mat, const NumericPolicy& policy = kDefaultPolicy);

  /// Skips validation; for outputs of maps already known to preserve the invariants.
  static DensityMatrix trusted(CMatrix mat);

  int cutoff() const { return static_cast<int>(mat_.rows()) - 1; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  const CMatrix& matrix() const { return mat_; }
  Complex operator()(int i, int j) const { return mat_(i, j); }

  /// tr(n rho).
  double mean_photon() const;

  /// Largest |rho_ij| with i != j.
  double max_off_diagonal() const;

 private:
  struct TrustedTag {};
  DensityMatrix(CMatrix mat, TrustedTag) : mat_(std::move(mat)) {}

  CMatrix mat_;
};

struct FockState {
  int n = 0;

  /// Embeds |n> into the basis with the given cutoff (>= n).
  PureState embed(int cutoff) const;
  PureState embed() const { return embed(n); }
};

/// |a| |ceil(nbar)-1> + |c| |ceil(nbar)>, the two-level superposition with
/// mean photon number exactly nbar.
class InBetweenState {
 public:
  explicit InBetweenState(double nbar);

  double nbar() const { return nbar_; }
  int ceiling() const { return ceiling_; }
  /// |c(nbar)|, amplitude on |ceil(nbar)>.
  double upper_amplitude() const { return upper_; }
  /// |a(nbar)|, amplitude on |ceil(nbar)-1>.
  double lower_amplitude() const { return lower_; }

  PureState embed(int cutoff) const;
  PureState embed() const { return embed(ceiling_); }

 private:
  double nbar_;
  int ceiling_;
  double upper_;
  double lower_;
};

DensityMatrix pure_to_density(const PureState& s);

inline double mean_photon(const PureState& s) { return s.mean_photon(); }

/// Frobenius norm of AB - BA.
double commutator_norm(const DensityMatrix& a, const DensityMatrix& b);
double commutator_norm(const CMatrix& a, const CMatrix& b);

/// Truncated annihilation operator: a|n> = sqrt(n)|n-1>.
RMatrix annihilation(int cutoff);

}  // namespace personick
