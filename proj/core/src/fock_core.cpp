#include "personick/fock_core.hpp"

#include <cmath>
#include <string>

namespace personick {

PureState::PureState(CVector amps, const NumericPolicy& policy) : amps_(std::move(amps)) {
  if (amps_.size() == 0) {
    throw std::invalid_argument("PureState: empty amplitude vector");
  }
  const double norm2 = amps_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > policy.construction_tol) {
    throw std::invalid_argument("PureState: amplitudes not normalized (|d|^2 = " +
                                std::to_string(norm2) + ")");
  }
}

PureState PureState::normalized(CVector amps) {
  const double norm = amps.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("PureState: cannot normalize a zero or non-finite vector");
  }
  amps /= norm;
  return PureState(std::move(amps));
}

double PureState::mean_photon() const {
  double total = 0.0;
  for (Eigen::Index n = 0; n < amps_.size(); ++n) {
    total += static_cast<double>(n) * std::norm(amps_[n]);
  }
  return total;
}

PureState PureState::padded(int cutoff) const {
  if (cutoff < this->cutoff()) {
    throw DimensionMismatch("PureState::padded: cutoff " + std::to_string(cutoff) +
                            " below current cutoff " + std::to_string(this->cutoff()));
  }
  CVector out = CVector::Zero(cutoff + 1);
  out.head(amps_.size()) = amps_;
  return PureState(std::move(out));
}

PureState PureState::phase_rotated(double phi) const {
  CVector out = amps_;
  for (Eigen::Index n = 0; n < out.size(); ++n) {
    out[n] *= std::polar(1.0, phi * static_cast<double>(n));
  }
  return PureState(std::move(out));
}

DensityMatrix::DensityMatrix(CMatrix mat, const NumericPolicy& policy) : mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
    throw DimensionMismatch("DensityMatrix: matrix must be square and non-empty");
  }
  const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > policy.construction_tol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(mat_.trace() - Complex(1.0)) > policy.derived_tol) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  }
  const CMatrix sym = 0.5 * (mat_ + mat_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -policy.derived_tol) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::trusted(CMatrix mat) {
  return DensityMatrix(std::move(mat), TrustedTag{});
}

double DensityMatrix::mean_photon() const {
  double total = 0.0;
  for (Eigen::Index n = 0; n < mat_.rows(); ++n) {
    total += static_cast<double>(n) * mat_(n, n).real();
  }
  return total;
}

double DensityMatrix::max_off_diagonal() const {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < mat_.rows(); ++i) {
    for (Eigen::Index j = 0; j < mat_.cols(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(mat_(i, j)));
    }
  }
  return worst;
}

PureState FockState::embed(int cutoff) const {
  if (n < 0) throw std::invalid_argument("FockState: negative photon number");
  if (cutoff < n) {
    throw DimensionMismatch("FockState: cutoff " + std::to_string(cutoff) + " below n = " +
                            std::to_string(n));
  }
  CVector amps = CVector::Zero(cutoff + 1);
  amps[n] = 1.0;
  return PureState(std::move(amps));
}

InBetweenState::InBetweenState(double nbar) : nbar_(nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw std::invalid_argument("InBetweenState: nbar must be finite and >= 0");
  }
  ceiling_ = static_cast<int>(std::ceil(nbar));
  const double c2 = 1.0 - static_cast<double>(ceiling_) + nbar;
  upper_ = std::sqrt(c2);
  lower_ = std::sqrt(1.0 - c2);
}

PureState InBetweenState::embed(int cutoff) const {
  if (cutoff < ceiling_) {
    throw DimensionMismatch("InBetweenState: cutoff " + std::to_string(cutoff) +
                            " below ceil(nbar) = " + std::to_string(ceiling_));
  }
  CVector amps = CVector::Zero(cutoff + 1);
  amps[ceiling_] = upper_;
  if (ceiling_ > 0) amps[ceiling_ - 1] = lower_;
  return PureState(std::move(amps));
}

DensityMatrix pure_to_density(const PureState& s) {
  const CVector& d = s.amplitudes();
  return DensityMatrix::trusted(d * d.adjoint());
}

double commutator_norm(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("commutator_norm: operand dimensions differ");
  }
  return (a * b - b * a).norm();
}

double commutator_norm(const DensityMatrix& a, const DensityMatrix& b) {
  return commutator_norm(a.matrix(), b.matrix());
}

RMatrix annihilation(int cutoff) {
  RMatrix a = RMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace personick
