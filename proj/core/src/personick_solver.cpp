#include "personick/personick_solver.hpp"

#include <algorithm>
#include <cmath>

#include "personick/loss_channel.hpp"

namespace personick {

Gamma0Basis decompose_gamma0(const CMatrix& gamma0, const NumericPolicy& policy) {
  const CMatrix sym = 0.5 * (gamma0 + gamma0.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym);
  Gamma0Basis basis;
  basis.eigenvalues = eig.eigenvalues();
  basis.eigenvectors = eig.eigenvectors();
  const double top = std::max(basis.eigenvalues.maxCoeff(), 0.0);
  basis.null_threshold = policy.null_rel * top;
  return basis;
}

PersonickSet build_gammas(const PureState& state, const PriorPdf& prior, int order,
                          const NumericPolicy&) {
  const int dim = state.dim();
  const LossExpansion channel(pure_to_density(state));
  const QuadratureRule rule = make_root_rule(prior, order);

  PersonickSet set;
  set.gamma0 = CMatrix::Zero(dim, dim);
  set.gamma1 = CMatrix::Zero(dim, dim);
  set.gamma2 = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double tau = rule.nodes[i];
    const double w = rule.weights[i];
    if (w == 0.0) continue;
    const CMatrix rho = channel.at(tau);
    set.gamma0 += w * rho;
    set.gamma1 += (w * tau) * rho;
    set.gamma2 += (w * tau * tau) * rho;
  }
  set.commutator_g01 = commutator_norm(set.gamma0, set.gamma1);
  set.quadrature_order = is_discrete(prior) ? 0 : order;
  return set;
}

PersonickSet solve_b(PersonickSet gammas, const NumericPolicy& policy) {
  const Gamma0Basis basis = decompose_gamma0(gammas.gamma0, policy);
  const CMatrix& u = basis.eigenvectors;
  const RVector& lambda = basis.eigenvalues;
  const CMatrix g1 = u.adjoint() * gammas.gamma1 * u;
  const int dim = static_cast<int>(lambda.size());

  CMatrix b = CMatrix::Zero(dim, dim);
  double stray = 0.0;
  int support = 0;
  for (int i = 0; i < dim; ++i) {
    if (lambda[i] > basis.null_threshold) ++support;
    for (int j = 0; j < dim; ++j) {
      const double denom = lambda[i] + lambda[j];
      if (denom > basis.null_threshold) {
        b(i, j) = 2.0 * g1(i, j) / denom;
      } else {
        stray = std::max(stray, std::abs(g1(i, j)));
      }
    }
  }
  b = u * b * u.adjoint();
  gammas.b_op = 0.5 * (b + b.adjoint());
  gammas.support_dim = support;
  gammas.ill_posed_weight = stray;
  gammas.ill_posed = stray > policy.ill_posed_tol;
  gammas.has_b = true;
  return gammas;
}

double mmse_lower_bound(const PersonickSet& gammas, const PriorPdf&,
                        const NumericPolicy& policy) {
  const Gamma0Basis basis = decompose_gamma0(gammas.gamma0, policy);
  const CMatrix g1 = basis.eigenvectors.adjoint() * gammas.gamma1 * basis.eigenvectors;
  const CMatrix g1_sq = g1 * g1;
  double bound = 0.0;
  for (Eigen::Index i = 0; i < basis.eigenvalues.size(); ++i) {
    if (basis.eigenvalues[i] > basis.null_threshold) {
      bound += g1_sq(i, i).real() / basis.eigenvalues[i];
    }
  }
  // tr Gamma2 = int P tau^2, evaluated on the same rule as delta.
  return gammas.gamma2.trace().real() - bound;
}

namespace {

struct Evaluation {
  PersonickSet set;
  double delta;
  double tr_gamma2;
  double tr_b_gamma1;
};

Evaluation evaluate(const PureState& state, const PriorPdf& prior, int order,
                    const NumericPolicy& policy) {
  PersonickSet set = solve_b(build_gammas(state, prior, order, policy), policy);
  const double tr2 = set.gamma2.trace().real();
  const double trb = (set.b_op * set.gamma1).trace().real();
  return Evaluation{std::move(set), tr2 - trb, tr2, trb};
}

// Runs the adaptive order doubling; `converged` reports whether the
// tolerance was met before quadrature_max_order.
Evaluation converge(const PureState& state, const PriorPdf& prior, const NumericPolicy& policy,
                    bool& converged) {
  converged = true;
  if (is_discrete(prior)) return evaluate(state, prior, 1, policy);
  int order = std::max(policy.quadrature_order, 1);
  Evaluation current = evaluate(state, prior, order, policy);
  while (true) {
    const int next_order = order * 2;
    if (next_order > policy.quadrature_max_order) {
      converged = false;
      return current;
    }
    Evaluation next = evaluate(state, prior, next_order, policy);
    const bool done = std::abs(next.delta - current.delta) < policy.quadrature_converge_tol;
    current = std::move(next);
    order = next_order;
    if (done) return current;
  }
}

}  // namespace

PersonickSet personick_set(const PureState& state, const PriorPdf& prior,
                           const NumericPolicy& policy) {
  bool converged = true;
  return converge(state, prior, policy, converged).set;
}

MmseReport mmse(const PureState& state, const PriorPdf& prior, const NumericPolicy& policy) {
  bool converged = true;
  const Evaluation ev = converge(state, prior, policy, converged);

  MmseReport report;
  report.delta = ev.delta;
  report.tr_gamma2 = ev.tr_gamma2;
  report.tr_b_gamma1 = ev.tr_b_gamma1;
  report.delta_lb = mmse_lower_bound(ev.set, prior, policy);
  report.commutator_g01 = ev.set.commutator_g01;
  report.ill_posed = ev.set.ill_posed;
  report.ill_posed_weight = ev.set.ill_posed_weight;
  report.quadrature_order = ev.set.quadrature_order;
  report.quadrature_converged = converged;

  Eigen::SelfAdjointEigenSolver<CMatrix> eig(ev.set.b_op);
  report.b_eigenvalues = eig.eigenvalues();
  report.b_eigenvectors = eig.eigenvectors();
  return report;
}

}  // namespace personick
