#include "personick/loss_channel.hpp"

#include <cmath>
#include <string>

namespace personick {

namespace {

// diag(tau^{n/2}), n = 0..dim-1.
RVector root_tau_powers(double tau, int dim) {
  RVector out(dim);
  const double root = std::sqrt(tau);
  double value = 1.0;
  for (int n = 0; n < dim; ++n) {
    out[n] = value;
    value *= root;
  }
  return out;
}

}  // namespace

Transmissivity::Transmissivity(double tau) : tau_(tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("Transmissivity must lie in [0, 1], got " + std::to_string(tau));
  }
}

DensityMatrix apply_kraus(const DensityMatrix& rho0, Transmissivity tau) {
  const int dim = rho0.dim();
  const double t = tau.value();
  const RMatrix a = annihilation(dim - 1);
  const RVector scale = root_tau_powers(t, dim);

  CMatrix lowered = rho0.matrix();  // a^l rho0 a^{dag l}
  CMatrix out = CMatrix::Zero(dim, dim);
  double coeff = 1.0;  // (1-tau)^l / l!
  for (int l = 0; l < dim; ++l) {
    if (l > 0) {
      lowered = a * lowered * a.transpose();
      coeff *= (1.0 - t) / static_cast<double>(l);
    }
    out += coeff * lowered;
  }
  out = scale.asDiagonal() * out * scale.asDiagonal();
  return DensityMatrix::trusted(std::move(out));
}

LadderPropagator ladder_propagator(int l, Transmissivity tau, int dim) {
  if (l < 0 || dim < 1) {
    throw std::invalid_argument("ladder_propagator: need l >= 0 and dim >= 1");
  }
  const double t = tau.value();
  RMatrix m = RMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    // exp(A_D t)_{ii} = tau^{l/2 + i}
    const double diag = std::pow(t, 0.5 * l + i);
    double shift = 1.0;  // (1-tau)^{j-i} / (j-i)! * prod sqrt(r (l + r))
    for (int j = i; j < dim; ++j) {
      if (j > i) {
        const double r = static_cast<double>(j);
        shift *= (1.0 - t) / static_cast<double>(j - i) * std::sqrt(r * (l + r));
      }
      m(i, j) = diag * shift;
    }
  }
  return LadderPropagator{l, std::move(m)};
}

DensityMatrix apply_ladder(const DensityMatrix& rho0, Transmissivity tau) {
  const int dim = rho0.dim();
  const CMatrix& c0 = rho0.matrix();
  CMatrix out = CMatrix::Zero(dim, dim);
  for (int l = 0; l < dim; ++l) {
    const int len = dim - l;
    const RMatrix prop = ladder_propagator(l, tau, len).matrix;
    CVector below(len);  // c_{n+l, n}
    CVector above(len);  // c_{n, n+l}
    for (int n = 0; n < len; ++n) {
      below[n] = c0(n + l, n);
      above[n] = c0(n, n + l);
    }
    const CVector below_t = prop * below;
    const CVector above_t = prop * above;
    for (int n = 0; n < len; ++n) {
      out(n + l, n) = below_t[n];
      out(n, n + l) = above_t[n];
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

LossExpansion::LossExpansion(const DensityMatrix& rho0) : dim_(rho0.dim()) {
  const RMatrix a = annihilation(dim_ - 1);
  CMatrix lowered = rho0.matrix();
  double inv_factorial = 1.0;
  terms_.reserve(dim_);
  for (int l = 0; l < dim_; ++l) {
    if (l > 0) {
      lowered = a * lowered * a.transpose();
      inv_factorial /= static_cast<double>(l);
    }
    terms_.push_back(inv_factorial * lowered);
  }
}

CMatrix LossExpansion::at(double tau) const {
  const RVector scale = root_tau_powers(tau, dim_);
  CMatrix out = CMatrix::Zero(dim_, dim_);
  double loss = 1.0;
  for (const CMatrix& term : terms_) {
    out += loss * term;
    loss *= 1.0 - tau;
  }
  return scale.asDiagonal() * out * scale.asDiagonal();
}

RVector LossExpansion::diagonal_at(double tau) const {
  RVector out = RVector::Zero(dim_);
  double loss = 1.0;
  for (const CMatrix& term : terms_) {
    out += loss * term.diagonal().real();
    loss *= 1.0 - tau;
  }
  double power = 1.0;
  for (int k = 0; k < dim_; ++k) {
    out[k] *= power;
    power *= tau;
  }
  return out;
}

}  // namespace personick
