#include <gtest/gtest.h>

#include "griffiths/griffiths_forms.hpp"
#include "griffiths/hypersurface.hpp"
#include "oracles.hpp"

using namespace griffiths;

namespace {

ExteriorForm vol_n(int n) {
  std::vector<int> idx;
  for (int j = 0; j < n; ++j) idx.push_back(j);
  return ExteriorForm::basis(n, idx);
}

}  // namespace

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(2, ScalarMatrix::identity(4)), Scalar(6));
  const Scalar lam = Scalar::rational(3, 2);
  ScalarMatrix A = ScalarMatrix::diagonal({lam, -lam, Scalar(0), Scalar(0)});
  EXPECT_EQ(sigma(2, A), -lam * lam);
  std::mt19937_64 gen(1);
  ScalarMatrix B = oracle::random_symmetric(gen, 5);
  EXPECT_EQ(sigma(5, B), determinant(B));
  EXPECT_EQ(sigma(0, B), Scalar(1));
}

TEST(Sigma, MatchesMinorsAndOracle) {
  std::mt19937_64 gen(2);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      ScalarMatrix A = oracle::random_symmetric(gen, n);
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(sigma(i, A), sigma_minors(i, A));
        if (n <= 5) EXPECT_EQ(sigma(i, A).exact(), oracle::sigma(i, A));
      }
    }
}

TEST(Pullback, LegendreConditions) {
  std::mt19937_64 gen(3);
  for (int n = 1; n <= 5; ++n) {
    GriffithsSystem sys(FrameContext(n, Scalar(1)));
    ScalarMatrix A = oracle::random_symmetric(gen, n);
    EXPECT_TRUE(pullback_form(A, sys.theta()).is_zero());
    EXPECT_TRUE(pullback_form(A, sys.d_theta()).is_zero());
    EXPECT_EQ(pullback_form(A, sys.alpha(n)), vol_n(n));
  }
  ScalarMatrix asym(2, 2, std::vector<Scalar>{1, 2, 0, 1});
  GriffithsSystem sys(FrameContext(2, Scalar(1)));
  EXPECT_FALSE(pullback_form(asym, sys.d_theta()).is_zero());
}

TEST(Pullback, AlphaDensities) {
  std::mt19937_64 gen(4);
  for (int n = 1; n <= 5; ++n) {
    GriffithsSystem sys(FrameContext(n, Scalar(1)));
    for (int trial = 0; trial < 10; ++trial) {
      ScalarMatrix A = oracle::random_symmetric(gen, n);
      for (int i = 0; i <= n; ++i) {
        const Scalar density = pullback_alpha(i, A);
        EXPECT_EQ(pullback_form(A, sys.alpha(i)), vol_n(n) * density);
        const Rational sign = (n - i) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(density.exact(), sign * oracle::sigma(n - i, A));
      }
    }
  }
}

TEST(Pullback, RoundSphere) {
  const int n = 4;
  const Rational radius(5, 2);
  ScalarMatrix A = ScalarMatrix::identity(n).scaled(Scalar(Rational(1 / radius)));
  for (int i = 0; i <= n; ++i) {
    Rational expected = oracle::binomial(n, n - i);
    for (int j = 0; j < n - i; ++j) expected /= -radius;
    EXPECT_EQ(pullback_alpha(i, A).exact(), expected);
  }
  EXPECT_EQ(pullback_alpha(n - 1, A), -sigma(1, A));
  EXPECT_EQ(pullback_alpha(0, A), determinant(A));
}

TEST(Weingarten, IdentityWithAlphaSum) {
  std::mt19937_64 gen(5);
  for (int n = 1; n <= 5; ++n) {
    ScalarMatrix A = oracle::random_symmetric(gen, n);
    const int sign = n % 2 == 0 ? 1 : -1;
    EXPECT_EQ(weingarten_density(Scalar(0), A), determinant(A) * sign);
    for (int t = -2; t <= n + 2; ++t) {
      Scalar series(0);
      for (int i = 0; i <= n; ++i) series += pow(Scalar(t), i) * pullback_alpha(i, A);
      EXPECT_EQ(weingarten_density(Scalar(t), A), series);
    }
  }
  EXPECT_EQ(weingarten_density(Scalar(3), ScalarMatrix::identity(4)), Scalar(16));
}

TEST(ELResiduals, Examples) {
  AmbientData flat{Scalar(0), Scalar(0), Scalar(0)};
  ELResiduals zero = el_residuals(ScalarMatrix(3, 3), flat);
  EXPECT_EQ(zero.volume, Scalar(0));
  EXPECT_EQ(zero.mean, Scalar(0));
  EXPECT_EQ(*zero.scal, Scalar(0));

  const int n = 4;
  ScalarMatrix sphere = ScalarMatrix::identity(n).scaled(Scalar::rational(1, 3));
  ELResiduals r = el_residuals(sphere, flat);
  EXPECT_EQ(r.mean, Scalar(2 * 6) * Scalar::rational(1, 9));
  EXPECT_EQ(r.volume, Scalar::rational(4, 3));
}

TEST(ELResiduals, ScalarCurvatureVanishesForSurfaces) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 20; ++trial) {
    ScalarMatrix A = oracle::random_symmetric(gen, 2);
    AmbientData amb = AmbientData::space_form(2, Scalar::rational(trial - 10, 3));
    EXPECT_EQ(scal_residual(A, amb), Scalar(0));
  }
  AmbientData unknown{Scalar(0), Scalar(0), std::nullopt};
  EXPECT_THROW(scal_residual(ScalarMatrix::identity(3), unknown), std::invalid_argument);
  EXPECT_FALSE(el_residuals(ScalarMatrix::identity(3), unknown).scal.has_value());
}

TEST(ELResiduals, AgreeWithEulerLagrangeForms) {
  std::mt19937_64 gen(7);
  for (int n = 2; n <= 5; ++n) {
    const Scalar k = Scalar::rational(n - 3, 2);
    AmbientData amb = AmbientData::space_form(n, k);
    ScalarMatrix A = oracle::random_symmetric(gen, n);
    ELResiduals r = el_residuals(A, amb);
    ScalarVector b(n + 1, Scalar(0));
    b[n] = Scalar(1);
    EXPECT_EQ(pullback_form(A, euler_lagrange_form(n, b, k, Scalar(1))), vol_n(n) * -r.volume);
    ScalarVector bm(n + 1, Scalar(0));
    bm[n - 1] = Scalar(1);
    EXPECT_EQ(pullback_form(A, euler_lagrange_form(n, bm, k, Scalar(1))), vol_n(n) * r.mean);
    ScalarVector bs(n + 1, Scalar(0));
    bs[n] = k * ((n - 1) * n);
    bs[n - 2] = Scalar(2);
    EXPECT_EQ(pullback_form(A, euler_lagrange_form(n, bs, k, Scalar(1))), vol_n(n) * -*r.scal);
  }
}

TEST(GaussScal, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const Scalar k = Scalar::rational(2, 5);
    EXPECT_EQ(gauss_scal(ScalarMatrix(n, n), AmbientData::space_form(n, k)), k * ((n - 1) * n));
  }
  AmbientData flat{Scalar(0), Scalar(0), Scalar(0)};
  EXPECT_EQ(gauss_scal(ScalarMatrix::identity(2), flat), Scalar(2));
  // Einstein ambient Ric = c g with zero mean residual: Scal^N = n c.
  const int n = 3;
  const Scalar c = Scalar(2);
  AmbientData einstein{c * (n + 1), c, std::nullopt};
  ScalarMatrix A = ScalarMatrix::diagonal({Scalar(1), Scalar(1), Scalar(0)});
  ASSERT_EQ(el_residuals(A, einstein).mean, Scalar(0));
  EXPECT_EQ(gauss_scal(A, einstein), c * n);
}
