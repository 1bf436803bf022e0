#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "personick/numeric_policy.hpp"
#include "personick/quadrature.hpp"

namespace personick {

struct DeltaPrior {
  double tau0;
};

/// q delta(tau - tau0) + (1-q) delta(tau - tau1).
struct TwoPointPrior {
  double q;
  double tau0;
  double tau1;
};

/// tau^{alpha-1} (1-tau)^{beta-1} / B(alpha, beta).
struct BetaPrior {
  double alpha;
  double beta;
};

/// Discrete measure sum_i w_i delta(tau - node_i).
struct NumericPrior {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Prior PDF on the transmissivity. Constructed only through the validating
/// factories; a two-point prior with q in {0,1} or tau0 == tau1 is stored as
/// the equivalent delta.
class PriorPdf {
 public:
  using Variant = std::variant<DeltaPrior, TwoPointPrior, BetaPrior, NumericPrior>;

  static PriorPdf delta(double tau0);
  static PriorPdf two_point(double q, double tau0, double tau1);
  static PriorPdf beta(double alpha, double beta);
  /// Weights must be non-negative and sum to 1 within 1e-12.
  static PriorPdf numeric(std::vector<double> nodes, std::vector<double> weights);

  /// Parses `delta:t0`, `twopoint:q,t0,t1`, `beta:a,b` or `file:<path>`
  /// (CSV rows `node,weight`; weights renormalized if they sum to 1 within 1e-6).
  static PriorPdf parse(std::string_view spec);

  const Variant& variant() const { return v_; }
  bool is_delta() const { return std::holds_alternative<DeltaPrior>(v_); }
  template <class T>
  const T* as() const { return std::get_if<T>(&v_); }

  /// Canonical spec string, round-trippable through parse() for non-file priors.
  std::string describe() const;

 private:
  explicit PriorPdf(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Integral of P(tau) tau^k.
double moment(const PriorPdf& p, int k);
double variance(const PriorPdf& p);
double mean(const PriorPdf& p);

/// Rule for integrals against P: sum_i w_i f(tau_i) ~ int P(tau) f(tau) dtau.
/// Beta priors fold the density into Gauss-Jacobi weights; discrete priors
/// return their exact point masses.
QuadratureRule make_rule(const PriorPdf& p, int order);

/// Same contract as make_rule, but Beta rules are Gauss-Jacobi in s = sqrt(tau).
/// Exact on polynomials in sqrt(tau) when beta is an integer and
/// exponentially convergent otherwise; used for channel outputs whose
/// coherences carry half-integer powers of tau.
QuadratureRule make_root_rule(const PriorPdf& p, int order);

/// True for priors whose rules are exact point masses (order-independent).
bool is_discrete(const PriorPdf& p);

/// Real value or a first-class "diverges to +infinity" marker.
class MaybeDivergent {
 public:
  static MaybeDivergent finite(double v) { return MaybeDivergent(v, false); }
  static MaybeDivergent divergent() { return MaybeDivergent(0.0, true); }

  bool is_divergent() const { return divergent_; }
  bool is_finite() const { return !divergent_; }
  /// Throws std::logic_error when divergent.
  double value() const;
  /// 1/x, with 1/divergent = 0 and 1/0 = divergent.
  MaybeDivergent reciprocal() const;

 private:
  MaybeDivergent(double v, bool d) : value_(v), divergent_(d) {}
  double value_;
  bool divergent_;
};

/// Fisher information of the prior, int P (d ln P / d tau)^2. Finite only for
/// Beta with alpha > 2 and beta > 2.
MaybeDivergent prior_fisher_jp(const PriorPdf& p);

/// ln B(a, b).
double log_beta_fn(double a, double b);

}  // namespace personick
