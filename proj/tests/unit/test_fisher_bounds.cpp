#include <gtest/gtest.h>

#include "oracles.hpp"
#include "personick/fisher_bounds.hpp"
#include "personick/fock_closed_forms.hpp"

using namespace personick;

namespace {

const PriorPdf kTwoPointRef = PriorPdf::two_point(0.79, 0.127, 0.641);
const PriorPdf kBetaRef = PriorPdf::beta(2.33, 3.84);

}  // namespace

TEST(Qfi, Examples) {
  EXPECT_NEAR(qfi_fock(1, 0.5).value(), 4.0, 1e-15);
  EXPECT_EQ(qfi_fock(0, 0.3).value(), 0.0);
  EXPECT_NEAR(qfi_fock(4, 0.3).value(), 4.0 * qfi_fock(1, 0.3).value(), 1e-12);
  EXPECT_TRUE(qfi_fock(2, 0.0).is_divergent());
  EXPECT_TRUE(qfi_fock(2, 1.0).is_divergent());
}

TEST(JeInv, Examples) {
  EXPECT_NEAR(je_inv(1, kTwoPointRef).value(), 0.135913, 1e-6);
  EXPECT_NEAR(je_inv(1, kTwoPointRef).value(), 0.79 * 0.127 * 0.873 + 0.21 * 0.641 * 0.359, 1e-15);
  EXPECT_NEAR(je_inv(1, PriorPdf::beta(1, 1)).value(), 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(je_inv(3, PriorPdf::delta(0.3)).value(), 0.3 * 0.7 / 3.0, 1e-15);
  EXPECT_TRUE(je_inv(0, kTwoPointRef).is_divergent());
}

TEST(JeInv, BetaAgainstTanhSinh) {
  const double ref = oracle::tanh_sinh([](double x, double xc) { return oracle::beta_density(x, xc, 2.33, 3.84) * x * xc; });
  EXPECT_NEAR(je_inv(1, kBetaRef).value(), ref, 1e-13);
}

TEST(Jd, Examples) {
  const double jd1 = jd(1, kTwoPointRef).value();
  EXPECT_NEAR(jd1, 0.79 / (0.127 * 0.873) + 0.21 / (0.641 * 0.359), 1e-12);
  EXPECT_NEAR(1.0 / jd1, 0.12441, 1e-5);
  EXPECT_NEAR(jd(2, kTwoPointRef).value(), 2.0 * jd1, 1e-12);
  EXPECT_NEAR(jd(1, PriorPdf::beta(3, 3)).value(), 5.0, 1e-12);  // B(2,2)/B(3,3) = (1/6)/(1/30)
}

TEST(Jd, BetaAgainstTanhSinh) {
  for (auto [a, b] : {std::pair{3.0, 3.0}, {2.33, 3.84}, {1.5, 6.0}}) {
    const double ref =
        oracle::tanh_sinh([&](double x, double xc) { return oracle::beta_density(x, xc, a, b) / (x * xc); });
    EXPECT_NEAR(jd(1, PriorPdf::beta(a, b)).value(), ref, 1e-9 * ref);
  }
}

TEST(Jd, Divergent) {
  EXPECT_TRUE(jd(1, PriorPdf::beta(1, 3)).is_divergent());
  EXPECT_TRUE(jd(1, PriorPdf::two_point(0.5, 0.0, 0.5)).is_divergent());
  EXPECT_TRUE(jd(1, PriorPdf::delta(1.0)).is_divergent());
  EXPECT_EQ(jd(0, kBetaRef).value(), 0.0);
}

TEST(Jb, FiniteForShapesAboveTwo) {
  const MaybeDivergent b = jb(1, kBetaRef);
  ASSERT_TRUE(b.is_finite());
  EXPECT_NEAR(b.value(), 82.7544340586, 1e-8);
  EXPECT_LT(b.reciprocal().value(), fock_mmse_beta(1, 2.33, 3.84));
}

TEST(Jb, Divergent) {
  for (int n : {0, 1, 5}) {
    EXPECT_TRUE(jb(n, kTwoPointRef).is_divergent());
    EXPECT_TRUE(jb(n, PriorPdf::beta(2, 4)).is_divergent());
  }
}

TEST(Jb, SumOfParts) {
  for (auto [a, b] : {std::pair{3.0, 3.0}, {2.33, 3.84}, {4.5, 2.2}, {10.0, 7.0}})
    for (int n = 0; n <= 6; ++n) {
      const PriorPdf p = PriorPdf::beta(a, b);
      const double jp_quad = oracle::tanh_sinh([&](double x, double xc) {
        const double s = (a - 1.0) / x - (b - 1.0) / xc;
        return oracle::beta_density(x, xc, a, b) * s * s;
      });
      EXPECT_NEAR(jb(n, p).value(), jd(n, p).value() + jp_quad, 1e-9 * jb(n, p).value()) << a << ' ' << b;
      EXPECT_NEAR(jb(n, p).value(), jd(n, p).value() + prior_fisher_jp(p).value(), 1e-9);
    }
}

TEST(Jb, PrintedPrefactorIsOffByKnownFactor) {
  // The printed prefactor B(a-2, b-2)/B(a, b) does not reproduce J_D + J_P;
  // it overshoots by exactly (a+b-3)(a+b-4).
  const double a = 2.33, b = 3.84;
  for (int n = 1; n <= 4; ++n) {
    const double printed = jb_beta_as_printed(n, a, b);
    EXPECT_NEAR(printed / jb(n, kBetaRef).value(), (a + b - 3.0) * (a + b - 4.0), 1e-12);
  }
}

TEST(BoundOrdering, TwoPointReference) {
  for (int n = 1; n <= 10; ++n) {
    const double d = fock_mmse_twopoint(n, 0.79, 0.127, 0.641);
    const double di = jd(n, kTwoPointRef).reciprocal().value();
    const double ei = je_inv(n, kTwoPointRef).value();
    EXPECT_GT(di - d, 1e-6) << n;
    EXPECT_GT(ei - di, 1e-6) << n;
  }
}

TEST(Scaling, InverseInN) {
  for (const PriorPdf& p : {kTwoPointRef, kBetaRef, PriorPdf::beta(1, 1)}) {
    const double c = je_inv(1, p).value();
    for (int n = 2; n <= 20; ++n) EXPECT_NEAR(n * je_inv(n, p).value(), c, 1e-12);
  }
}

TEST(Report, BetaReference) {
  const BoundsReport r = fisher_report(1, kBetaRef);
  EXPECT_NEAR(r.je_inv.value(), 0.202247343401, 1e-11);
  EXPECT_NEAR(r.jd_inv.value(), 0.175203744161, 1e-11);
  EXPECT_NEAR(r.jp.value(), 77.0467934783, 1e-8);
  EXPECT_NEAR(r.jb_inv.value(), 1.0 / r.jb.value(), 1e-16);
  const BoundsReport t = fisher_report(1, kTwoPointRef);
  EXPECT_TRUE(t.jb.is_divergent());
  EXPECT_EQ(t.jb_inv.value(), 0.0);
}
