#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "personick/fock_closed_forms.hpp"
#include "personick/personick_solver.hpp"

using namespace personick;

namespace {

const PriorPdf kTwoPointRef = PriorPdf::two_point(0.79, 0.127, 0.641);

CMatrix density(const PureState& s) { return pure_to_density(s).matrix(); }

}  // namespace

TEST(BuildGammas, FockTwoPointDiagonal) {
  const int n = 3;
  const PersonickSet g = build_gammas(FockState{n}.embed(), kTwoPointRef, 200);
  for (int k = 0; k < 3; ++k) {
    const CMatrix& gk = k == 0 ? g.gamma0 : (k == 1 ? g.gamma1 : g.gamma2);
    EXPECT_LT(DensityMatrix::trusted(gk).max_off_diagonal(), 1e-15);
    for (int l = 0; l <= n; ++l) {
      const double expect = 0.79 * std::pow(0.127, k) * binomial_loss(n, l, 0.127) +
                            0.21 * std::pow(0.641, k) * binomial_loss(n, l, 0.641);
      EXPECT_NEAR(gk(n - l, n - l).real(), expect, 1e-15);
    }
  }
}

TEST(BuildGammas, VacuumCarriesMoments) {
  const PriorPdf p = PriorPdf::beta(2, 4);
  const PersonickSet g = build_gammas(FockState{0}.embed(2), p, 200);
  EXPECT_NEAR(g.gamma0(0, 0).real(), 1.0, 1e-14);
  EXPECT_NEAR(g.gamma1(0, 0).real(), moment(p, 1), 1e-14);
  EXPECT_NEAR(g.gamma2(0, 0).real(), moment(p, 2), 1e-14);
  EXPECT_NEAR(g.gamma2.norm(), moment(p, 2), 1e-14);
}

TEST(BuildGammas, InBetweenTracesAreBetaMoments) {
  const PriorPdf p = PriorPdf::beta(2, 4);
  const PersonickSet g = build_gammas(InBetweenState(1.5).embed(), p, 200);
  EXPECT_EQ(g.gamma0.rows(), 3);
  EXPECT_NEAR(g.gamma0.trace().real(), 1.0, 1e-12);
  EXPECT_NEAR(g.gamma1.trace().real(), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(g.gamma2.trace().real(), 1.0 / 7.0, 1e-12);
}

TEST(BuildGammas, MatchOracle) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const PureState s = oracle::random_state(rng, 5);
    const PriorPdf p = oracle::random_prior(rng);
    const PersonickSet g = personick_set(s, p);
    const oracle::Gammas ref = oracle::gammas(density(s), p);
    EXPECT_LT((g.gamma0 - ref.g0).norm(), 1e-10) << p.describe();
    EXPECT_LT((g.gamma1 - ref.g1).norm(), 1e-10) << p.describe();
    EXPECT_LT((g.gamma2 - ref.g2).norm(), 1e-10) << p.describe();
    // Hermitian, PSD, traces = moments
    for (const CMatrix* gk : {&g.gamma0, &g.gamma1, &g.gamma2}) {
      EXPECT_LT((*gk - gk->adjoint()).norm(), 1e-14);
      EXPECT_GT(Eigen::SelfAdjointEigenSolver<CMatrix>(*gk).eigenvalues().minCoeff(), -1e-12);
    }
    for (int k = 0; k < 3; ++k) {
      const CMatrix& gk = k == 0 ? g.gamma0 : (k == 1 ? g.gamma1 : g.gamma2);
      EXPECT_NEAR(gk.trace().real(), moment(p, k), 1e-10);
    }
  }
}

TEST(SolveB, ScalarSylvester) {
  PersonickSet g;
  g.gamma0 = 0.5 * CMatrix::Identity(2, 2);
  g.gamma1 = 0.25 * CMatrix::Identity(2, 2);
  g.gamma2 = 0.2 * CMatrix::Identity(2, 2);
  const PersonickSet s = solve_b(g);
  EXPECT_LT((s.b_op - 0.5 * CMatrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_FALSE(s.ill_posed);
}

TEST(SolveB, FockTwoPointEigenvalues) {
  const int n = 4;
  const PersonickSet s = personick_set(FockState{n}.embed(), kTwoPointRef);
  const std::vector<double> b = fock_b_eigenvalues_twopoint(n, 0.79, 0.127, 0.641);
  EXPECT_LT(DensityMatrix::trusted(s.b_op).max_off_diagonal(), 1e-15);
  for (int l = 0; l <= n; ++l) EXPECT_NEAR(s.b_op(n - l, n - l).real(), b[l], 1e-12);
}

TEST(SolveB, RandomResidualAndZGrid) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 5; ++rep) {
    // full-rank 4-dim instance: Gammas of a random mixed state under a Beta prior
    const CMatrix rho = oracle::random_density(rng, 4);
    const PriorPdf p = PriorPdf::beta(1.5 + rep, 2.5);
    PersonickSet g;
    const oracle::Gammas ref = oracle::gammas(rho, p);
    g.gamma0 = ref.g0;
    g.gamma1 = ref.g1;
    g.gamma2 = ref.g2;
    const PersonickSet s = solve_b(g);
    const CMatrix residual = g.gamma0 * s.b_op + s.b_op * g.gamma0 - 2.0 * g.gamma1;
    EXPECT_LT(residual.norm(), 1e-10);
    EXPECT_LT((s.b_op - s.b_op.adjoint()).norm(), 1e-13);
    EXPECT_LT((s.b_op - oracle::sylvester_kron(g.gamma0, 2.0 * g.gamma1)).norm(), 1e-8);
    const CMatrix bz = oracle::sylvester_zgrid(g.gamma0, g.gamma1);
    EXPECT_NEAR((s.b_op * g.gamma1).trace().real(), (bz * g.gamma1).trace().real(), 1e-6);
  }
}

TEST(SolveB, IllPosedDiagnostic) {
  PersonickSet g;
  g.gamma0 = CMatrix::Zero(2, 2);
  g.gamma0(0, 0) = 1.0;
  g.gamma1 = CMatrix::Zero(2, 2);
  g.gamma1(1, 1) = 0.3;
  g.gamma2 = CMatrix::Zero(2, 2);
  const PersonickSet s = solve_b(g);
  EXPECT_TRUE(s.ill_posed);
  EXPECT_NEAR(s.ill_posed_weight, 0.3, 1e-15);
}

TEST(Mmse, DeltaPriorIsZero) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 20; ++rep) {
    const MmseReport r = mmse(oracle::random_state(rng, 6), PriorPdf::delta(0.37));
    EXPECT_NEAR(r.delta, 0.0, 1e-10);
    EXPECT_NEAR(r.delta_lb, 0.0, 1e-10);
  }
}

TEST(Mmse, TwoPointSinglePhoton) {
  const MmseReport r = mmse(FockState{1}.embed(), kTwoPointRef);
  EXPECT_NEAR(r.delta, 0.033142, 1e-6);
  EXPECT_NEAR(r.delta, 0.03314220641445381, 1e-13);
  EXPECT_NEAR(r.delta_lb, r.delta, 1e-14);
  EXPECT_EQ(r.b_eigenvalues.size(), 2);
}

TEST(Mmse, VacuumIsPriorVariance) {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    const PriorPdf p = oracle::random_prior(rng);
    EXPECT_NEAR(mmse(FockState{0}.embed(2), p).delta, variance(p), 1e-10) << p.describe();
  }
}

TEST(Mmse, MatchesOracle) {
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 30; ++rep) {
    const PureState s = oracle::random_state(rng, 5);
    const PriorPdf p = oracle::random_prior(rng);
    EXPECT_NEAR(mmse(s, p).delta, oracle::mmse(density(s), p), 1e-9) << p.describe();
  }
}

TEST(Mmse, BoundedByPriorVariance) {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 200; ++rep) {
    const PureState s = oracle::random_state(rng, 6);
    const PriorPdf p = oracle::random_prior(rng);
    const MmseReport r = mmse(s, p);
    EXPECT_GE(r.delta, -1e-12);
    EXPECT_LE(r.delta, variance(p) + 1e-12);
    EXPECT_TRUE(r.quadrature_converged);
  }
}

TEST(LowerBound, FockEqualityInBetweenGap) {
  const MmseReport fock = mmse(FockState{2}.embed(), kTwoPointRef);
  EXPECT_NEAR(fock.delta_lb, fock.delta, 1e-14);
  EXPECT_LT(fock.commutator_g01, 1e-15);

  const MmseReport ib = mmse(InBetweenState(1.5).embed(), kTwoPointRef);
  EXPECT_GT(ib.delta - ib.delta_lb, 1e-6);
  EXPECT_GT(ib.commutator_g01, 1e-6);
  RecordProperty("inbetween_gap", std::to_string(ib.delta - ib.delta_lb));
}

TEST(LowerBound, NeverAboveMmse) {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 300; ++rep) {
    const MmseReport r = mmse(oracle::random_state(rng, 6), oracle::random_prior(rng));
    ASSERT_LE(r.delta_lb, r.delta + 1e-10);
  }
}

TEST(PhaseInvariance, Mmse) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
  for (int rep = 0; rep < 50; ++rep) {
    const PureState s = oracle::random_state(rng, 6);
    const PriorPdf p = oracle::random_prior(rng);
    EXPECT_NEAR(mmse(s, p).delta, mmse(s.phase_rotated(phi(rng)), p).delta, 1e-10);
  }
}

TEST(Mmse, ConvergesForSingularBeta) {
  // alpha < 1 puts an integrable singularity at tau = 0.
  const PureState s = InBetweenState(2.5).embed();
  const PriorPdf p = PriorPdf::beta(0.6, 0.8);
  const MmseReport r = mmse(s, p);
  EXPECT_TRUE(r.quadrature_converged);
  EXPECT_NEAR(r.delta, oracle::mmse(density(s), p), 1e-9);
}
