#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "personick/fock_closed_forms.hpp"
#include "personick/personick_solver.hpp"

using namespace personick;

TEST(BinomialLoss, SumsToOne) {
  for (int n : {0, 1, 7, 40, 150})
    for (double tau : {0.0, 0.3, 1.0}) {
      double total = 0.0;
      for (int l = 0; l <= n; ++l) total += binomial_loss(n, l, tau);
      EXPECT_NEAR(total, 1.0, 1e-12) << n << ' ' << tau;
    }
  EXPECT_EQ(binomial_loss(3, 0, 1.0), 1.0);
  EXPECT_EQ(binomial_loss(3, 3, 0.0), 1.0);
  EXPECT_NEAR(binomial_coefficient(60, 30) / 1.1826458156486142e17, 1.0, 1e-13);
}

TEST(TwoPoint, ReferenceValue) {
  EXPECT_NEAR(fock_mmse_twopoint(1, 0.79, 0.127, 0.641), 0.033142, 1e-6);
  EXPECT_NEAR(fock_mmse_twopoint(1, 0.79, 0.127, 0.641), 0.03314220641445381, 1e-15);
}

TEST(TwoPoint, VacuumAndDegenerate) {
  EXPECT_NEAR(fock_mmse_twopoint(0, 0.3, 0.2, 0.7), 0.3 * 0.7 * 0.25, 1e-16);
  for (int n = 0; n < 5; ++n) EXPECT_EQ(fock_mmse_twopoint(n, 0.3, 0.4, 0.4), 0.0);
  EXPECT_EQ(fock_mmse_twopoint(3, 1.0, 0.2, 0.7), 0.0);
}

TEST(TwoPoint, Eigenvalues) {
  const std::vector<double> b = fock_b_eigenvalues_twopoint(1, 0.5, 0.2, 0.8);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_NEAR(b[0], 0.68, 1e-15);
  for (double x : fock_b_eigenvalues_twopoint(4, 1.0, 0.2, 0.8)) EXPECT_EQ(x, 0.2);
  for (double x : fock_b_eigenvalues_twopoint(4, 0.3, 0.6, 0.6)) EXPECT_EQ(x, 0.6);
  // tau1 = 1 can never lose a photon: l >= 1 has support only from tau0.
  const std::vector<double> edge = fock_b_eigenvalues_twopoint(2, 0.5, 0.0, 1.0);
  EXPECT_EQ(edge[0], 1.0);
  EXPECT_NEAR(edge[1], 0.5, 1e-15);  // no weight at all: prior mean
  EXPECT_EQ(edge[2], 0.0);
}

TEST(Beta, ClosedFormValues) {
  EXPECT_NEAR(fock_mmse_beta(1, 1, 1), 1.0 / 18.0, 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.1, 20.0);
  for (int rep = 0; rep < 100; ++rep) {
    const double a = u(rng), b = u(rng);
    EXPECT_NEAR(fock_mmse_beta(0, a, b), variance(PriorPdf::beta(a, b)), 1e-12);
  }
}

TEST(Beta, MonotoneAndAsymptotic) {
  const double a = 2.33, b = 3.84;
  for (int n = 1; n <= 50; ++n) EXPECT_LT(fock_mmse_beta(n + 1, a, b), fock_mmse_beta(n, a, b));
  const double lead = a * b / ((a + b) * (a + b + 1.0));
  EXPECT_NEAR(fock_mmse_beta(1e7, a, b) * 1e7, lead, 1e-5);
}

TEST(Generic, UniformFunctionals) {
  const GenericPriorFunctionals g = generic_prior_functionals(1, PriorPdf::beta(1, 1));
  ASSERT_EQ(g.g.size(), 2u);
  EXPECT_NEAR(g.g[0][0], 0.5, 1e-14);
  EXPECT_NEAR(g.g[1][0], 0.5, 1e-14);
  EXPECT_NEAR(g.g[0][1], 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(g.g[1][1], 1.0 / 6.0, 1e-14);
}

TEST(Generic, DeltaFunctionals) {
  const GenericPriorFunctionals g = generic_prior_functionals(4, PriorPdf::delta(0.35));
  for (int l = 0; l <= 4; ++l)
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(g.g[l][k], std::pow(0.35, k) * binomial_loss(4, l, 0.35), 1e-16);
}

TEST(Generic, TwoPointMatchesGammaDiagonal) {
  const PriorPdf p = PriorPdf::two_point(0.541, 0.706, 0.279);
  const GenericPriorFunctionals g = generic_prior_functionals(2, p);
  const PersonickSet s = build_gammas(FockState{2}.embed(), p, 0);
  for (int l = 0; l <= 2; ++l) {
    EXPECT_NEAR(g.g[l][0], s.gamma0(2 - l, 2 - l).real(), 1e-12);
    EXPECT_NEAR(g.g[l][1], s.gamma1(2 - l, 2 - l).real(), 1e-12);
    EXPECT_NEAR(g.g[l][2], s.gamma2(2 - l, 2 - l).real(), 1e-12);
  }
}

TEST(Generic, BetaFunctionalsAgainstTanhSinh) {
  const double a = 2.33, b = 3.84;
  const int n = 5;
  const GenericPriorFunctionals g = generic_prior_functionals(n, PriorPdf::beta(a, b));
  for (int l = 0; l <= n; ++l)
    for (int k = 0; k < 3; ++k) {
      const double ref = oracle::tanh_sinh([&](double x, double xc) {
        return oracle::beta_density(x, xc, a, b) * std::pow(x, k) * oracle::choose(n, l) * std::pow(x, n - l) *
               std::pow(xc, l);
      });
      EXPECT_NEAR(g.g[l][k], ref, 1e-13);
    }
}

TEST(Generic, MmseExamples) {
  EXPECT_NEAR(fock_mmse_generic(1, PriorPdf::beta(1, 1)), 1.0 / 18.0, 1e-14);
  EXPECT_EQ(fock_mmse_generic(3, PriorPdf::delta(0.4)), 0.0);
  EXPECT_NEAR(fock_mmse_generic(3, PriorPdf::two_point(0.541, 0.706, 0.279)),
              fock_mmse_twopoint(3, 0.541, 0.706, 0.279), 1e-15);
  for (int n = 0; n < 12; ++n)
    EXPECT_NEAR(fock_mmse_generic(n, PriorPdf::beta(2.33, 3.84)), fock_mmse_beta(n, 2.33, 3.84), 1e-13);
}

TEST(Generic, EigenvalueExamples) {
  const std::vector<double> b = fock_b_eigenvalues_generic(1, PriorPdf::beta(1, 1));
  EXPECT_NEAR(b[0], 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(b[1], 1.0 / 3.0, 1e-14);
  for (double x : fock_b_eigenvalues_generic(3, PriorPdf::delta(0.4))) EXPECT_NEAR(x, 0.4, 1e-15);
  const std::vector<double> gen = fock_b_eigenvalues_generic(5, PriorPdf::two_point(0.377, 0.416, 0.139));
  const std::vector<double> tp = fock_b_eigenvalues_twopoint(5, 0.377, 0.416, 0.139);
  for (int l = 0; l <= 5; ++l) EXPECT_NEAR(gen[l], tp[l], 1e-15);
}

TEST(Generic, SquaredFirstTermDisagrees) {
  // The generic formula is occasionally printed with the first term squared.
  // That form fails the n = 0 check (it must give the prior variance), the
  // unsquared one passes it.
  const PriorPdf p = PriorPdf::beta(2, 4);
  const GenericPriorFunctionals g = generic_prior_functionals(0, p);
  const double squared = g.g[0][2] * g.g[0][2] - g.g[0][1] * g.g[0][1] / g.g[0][0];
  const double plain = g.g[0][2] - g.g[0][1] * g.g[0][1] / g.g[0][0];
  EXPECT_NEAR(plain, variance(p), 1e-14);
  EXPECT_GT(std::abs(squared - variance(p)), 1e-2);
}

TEST(Generic, BoundsMonotoneAndHull) {
  const PriorPdf priors[] = {PriorPdf::two_point(0.79, 0.127, 0.641), PriorPdf::two_point(0.541, 0.706, 0.279),
                             PriorPdf::two_point(0.377, 0.416, 0.139), PriorPdf::beta(1, 1),
                             PriorPdf::beta(2, 4), PriorPdf::beta(2.33, 3.84), PriorPdf::beta(0.5, 0.5)};
  for (const PriorPdf& p : priors) {
    double prev = variance(p);
    for (int n = 0; n <= 30; ++n) {
      const double v = fock_mmse_generic(n, p);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, variance(p) + 1e-14);
      EXPECT_LE(v, prev + 1e-14) << p.describe() << " n=" << n;
      prev = v;
      double lo = 0.0, hi = 1.0;
      if (const auto* t = p.as<TwoPointPrior>()) {
        lo = std::min(t->tau0, t->tau1);
        hi = std::max(t->tau0, t->tau1);
      }
      for (double b : fock_b_eigenvalues_generic(n, p)) {
        EXPECT_GE(b, lo - 1e-14);
        EXPECT_LE(b, hi + 1e-14);
      }
    }
  }
}

TEST(Generic, AgreesWithSolverOnGrid) {
  const PriorPdf priors[] = {PriorPdf::two_point(0.79, 0.127, 0.641), PriorPdf::beta(1, 1),
                             PriorPdf::beta(2, 4), PriorPdf::beta(2.33, 3.84), PriorPdf::beta(0.7, 3.0)};
  int checked = 0;
  for (const PriorPdf& p : priors)
    for (int n = 0; n < 10; ++n, ++checked)
      EXPECT_NEAR(mmse(FockState{n}.embed(), p).delta, fock_mmse_generic(n, p), 1e-9) << p.describe() << n;
  EXPECT_EQ(checked, 50);
}
