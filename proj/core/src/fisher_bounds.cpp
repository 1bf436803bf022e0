#include "personick/fisher_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace personick {

namespace {

void require_n(int n) {
  if (n < 0) throw std::invalid_argument("photon number must be >= 0");
}

}  // namespace

MaybeDivergent qfi_fock(int n, double tau) {
  require_n(n);
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("qfi_fock: tau outside [0, 1]");
  if (n == 0) return MaybeDivergent::finite(0.0);
  if (tau == 0.0 || tau == 1.0) return MaybeDivergent::divergent();
  return MaybeDivergent::finite(n / (tau * (1.0 - tau)));
}

MaybeDivergent je_inv(int n, const PriorPdf& prior) {
  require_n(n);
  if (n == 0) return MaybeDivergent::divergent();
  const double dn = static_cast<double>(n);
  if (const auto* t = prior.as<TwoPointPrior>()) {
    return MaybeDivergent::finite(
        (t->tau1 * (1.0 - t->tau1) + t->q * (t->tau0 - t->tau1) * (1.0 - t->tau0 - t->tau1)) / dn);
  }
  if (const auto* b = prior.as<BetaPrior>()) {
    const double s = b->alpha + b->beta;
    return MaybeDivergent::finite(b->alpha * b->beta / (dn * s * (s + 1.0)));
  }
  // int P tau (1 - tau) / n; polynomial, so a short rule is exact.
  const QuadratureRule rule = make_rule(prior, 4);
  return MaybeDivergent::finite(rule.integrate([](double x) { return x * (1.0 - x); }) / dn);
}

MaybeDivergent jd(int n, const PriorPdf& prior) {
  require_n(n);
  const double dn = static_cast<double>(n);
  if (const auto* b = prior.as<BetaPrior>()) {
    if (b->alpha <= 1.0 || b->beta <= 1.0) return MaybeDivergent::divergent();
    if (n == 0) return MaybeDivergent::finite(0.0);
    // int tau^{alpha-2} (1-tau)^{beta-2} / B(alpha, beta) = B(alpha-1, beta-1) / B(alpha, beta)
    return MaybeDivergent::finite(
        dn * std::exp(log_beta_fn(b->alpha - 1.0, b->beta - 1.0) - log_beta_fn(b->alpha, b->beta)));
  }
  if (const auto* t = prior.as<TwoPointPrior>()) {
    const bool edge0 = t->tau0 == 0.0 || t->tau0 == 1.0;
    const bool edge1 = t->tau1 == 0.0 || t->tau1 == 1.0;
    if (n > 0 && (edge0 || edge1)) return MaybeDivergent::divergent();
    if (n == 0) return MaybeDivergent::finite(0.0);
    return MaybeDivergent::finite(
        dn * (t->q / (t->tau0 * (1.0 - t->tau0)) + (1.0 - t->q) / (t->tau1 * (1.0 - t->tau1))));
  }
  const QuadratureRule rule = make_rule(prior, 1);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    const MaybeDivergent f = qfi_fock(n, rule.nodes[i]);
    if (f.is_divergent()) return f;
    total += rule.weights[i] * f.value();
  }
  return MaybeDivergent::finite(total);
}

MaybeDivergent jb(int n, const PriorPdf& prior) {
  require_n(n);
  const auto* b = prior.as<BetaPrior>();
  if (!b || b->alpha <= 2.0 || b->beta <= 2.0) return MaybeDivergent::divergent();
  const double a = b->alpha;
  const double c = b->beta;
  const double prefactor = (a + c - 1.0) * (a + c - 2.0) / ((a - 1.0) * (c - 1.0) * (a - 2.0) * (c - 2.0));
  const double f = (a - 2.0) * (c - 2.0);
  const double g = (a - 1.0) * (c - 1.0) * (a + c - 4.0);
  return MaybeDivergent::finite(prefactor * (n * f + g));
}

double jb_beta_as_printed(int n, double alpha, double beta) {
  if (alpha <= 2.0 || beta <= 2.0) {
    throw std::invalid_argument("jb_beta_as_printed: needs alpha, beta > 2");
  }
  const double c = std::exp(log_beta_fn(alpha - 2.0, beta - 2.0) - log_beta_fn(alpha, beta));
  const double f = (alpha - 2.0) * (beta - 2.0);
  const double g = (alpha - 1.0) * (beta - 1.0) * (alpha + beta - 4.0);
  return c * (n * f + g);
}

BoundsReport fisher_report(int n, const PriorPdf& prior) {
  BoundsReport r;
  r.je_inv = je_inv(n, prior);
  r.jd = jd(n, prior);
  r.jp = prior_fisher_jp(prior);
  r.jb = jb(n, prior);
  r.jd_inv = r.jd.reciprocal();
  r.jb_inv = r.jb.reciprocal();
  return r;
}

}  // namespace personick
