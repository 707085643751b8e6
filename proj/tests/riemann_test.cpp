#include <gtest/gtest.h>

#include "griffiths/metrics.hpp"
#include "griffiths/riemann.hpp"
#include "griffiths/space_forms.hpp"
#include "oracles.hpp"

using namespace griffiths;

TEST(Riemann, CscMatchesFormula) {
  for (int n = 1; n <= 4; ++n) {
    RiemannTensor R = riemann_csc(Scalar::rational(-3, 2), n);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int c = 0; c <= n; ++c)
          for (int d = 0; d <= n; ++d)
            ASSERT_EQ(R(a, b, c, d).exact(), oracle::csc_component(Rational(-3, 2), a, b, c, d));
    EXPECT_TRUE(validate_riemann(R).empty());
  }
  RiemannTensor R = riemann_csc(Scalar(1), 2);
  EXPECT_EQ(R(0, 1, 1, 0), Scalar(1));
  EXPECT_EQ(R(0, 1, 0, 1), Scalar(-1));
  EXPECT_EQ(riemann_csc(Scalar(0), 3), RiemannTensor(3));
}

TEST(Riemann, SetRejectsDiagonalPairs) {
  RiemannTensor R(2);
  EXPECT_THROW(R.set(0, 0, 1, 2, Scalar(1)), std::invalid_argument);
  R.set(0, 1, 0, 1, Scalar(2));
  EXPECT_EQ(R(1, 0, 1, 0), Scalar(2));
  EXPECT_EQ(R(0, 1, 1, 0), Scalar(-2));
}

TEST(Riemann, ValidateFlagsBrokenSymmetries) {
  RiemannTensor R = riemann_csc(Scalar(1), 2);
  R.at(0, 1, 1, 0) = Scalar(5);
  auto v = validate_riemann(R);
  EXPECT_NE(std::find(v.begin(), v.end(), "antisymmetry_first_pair"), v.end());

  RiemannTensor B(3);
  B.set(0, 1, 2, 3, Scalar(1));
  auto w = validate_riemann(B);
  EXPECT_EQ(w, std::vector<std::string>{"first_bianchi"});
}

TEST(Riemann, RandomIsDeterministicAndValid) {
  for (int n : {1, 2, 3, 4, 5}) {
    RiemannTensor a = random_riemann(42, n), b = random_riemann(42, n);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(validate_riemann(a).empty());
    EXPECT_NE(a, random_riemann(43, n));
  }
}

TEST(Riemann, ProjectionsAreIdempotentOnCurvatureTensors) {
  RiemannTensor csc = riemann_csc(Scalar(3), 3);
  EXPECT_EQ(bianchi_project(csc), csc);
  EXPECT_EQ(symmetrize_riemann(csc), csc);
  RiemannTensor R = random_riemann(1, 3);
  EXPECT_EQ(symmetrize_riemann(R), R);
}

TEST(Ricci, SpaceForm) {
  const Scalar k = Scalar::rational(2, 3), s = Scalar::rational(1, 2);
  for (int n = 1; n <= 5; ++n) {
    RicciData d = ricci(riemann_csc(k, n), s);
    EXPECT_EQ(d.r, s * s * n * k);
    EXPECT_EQ(d.scal, k * (n * (n + 1)));
    EXPECT_EQ(einstein_residual(riemann_csc(k, n)), Scalar(0));
    EXPECT_TRUE(rho(riemann_csc(k, n), s).is_zero());
  }
  RicciData flat = ricci(RiemannTensor(3), Scalar(1));
  EXPECT_EQ(flat.r, Scalar(0));
  EXPECT_EQ(flat.ric, ScalarMatrix(4, 4));
}

TEST(Ricci, RIsSSquaredTimesRic00) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RiemannTensor R = random_riemann(seed, 2 + seed % 3);
    const Scalar s = Scalar::rational(1 + seed % 3, 2);
    RicciData d = ricci(R, s);
    EXPECT_EQ(d.r, s * s * d.ric(0, 0));
    Scalar direct(0);
    for (int j = 1; j <= R.n(); ++j) direct += R(j, 0, 0, j);
    EXPECT_EQ(d.r, s * s * direct);
    EXPECT_TRUE(d.ric.is_symmetric());
  }
}

TEST(Ricci, ProductOfUnitSpheres) {
  ScalarVector u{Scalar::rational(1, 2), Scalar::rational(1, 2), Scalar::rational(1, 2), Scalar::rational(1, 2)};
  RiemannTensor R = product_spheres_riemann(Scalar(1), Scalar(1), 2, 2, u);
  RicciData d = ricci(R, Scalar(3));
  EXPECT_EQ(d.ric, ScalarMatrix::identity(4));
  EXPECT_EQ(d.r, Scalar(9));
  EXPECT_EQ(einstein_residual(R), Scalar(0));
}

TEST(Ricci, UnequalProductResidual) {
  ScalarVector e0{1, 0, 0, 0};
  RiemannTensor R = product_spheres_riemann(Scalar(1), Scalar::rational(1, 4), 2, 2, e0);
  RicciData d = ricci(R, Scalar(1));
  EXPECT_EQ(d.ric, ScalarMatrix::diagonal({1, 1, Scalar::rational(1, 4), Scalar::rational(1, 4)}));
  EXPECT_EQ(einstein_residual(R), Scalar::rational(3, 8));
  EXPECT_TRUE(rho(R, Scalar(1)).is_zero());
}

TEST(Rho, MixedDirectionOnUnequalProduct) {
  // u = (e0 + e2)/sqrt 2 straddles both factors.
  ScalarVector u = normalize_direction({1, 0, 1, 0});
  RiemannTensor R = product_spheres_riemann(Scalar(1), Scalar::rational(1, 4), 2, 2, u);
  for (double s : {1.0, 0.5, 2.0}) {
    ExteriorForm r = rho(R, Scalar::real(s));
    EXPECT_NEAR(std::sqrt(r.norm_squared().to_double()), 0.375 * s, 1e-12);
    EXPECT_EQ(r.size(), 1u);
  }
}

TEST(Rho, VanishesOnEinsteinProjections) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    RiemannTensor E = einstein_project(random_riemann(seed, n));
    ASSERT_TRUE(validate_riemann(E).empty());
    ASSERT_EQ(einstein_residual(E), Scalar(0));
    ASSERT_TRUE(rho(E, Scalar::rational(1, 2)).is_zero());
  }
}

TEST(Riemann, KulkarniNomizuOfIdentityIsTwiceUnitSphere) {
  RiemannTensor R = kulkarni_nomizu_identity(ScalarMatrix::identity(4));
  EXPECT_EQ(R, riemann_csc(Scalar(2), 3));
}

TEST(Riemann, PerturbationStaysValid) {
  RiemannTensor R = riemann_csc(Scalar(1), 3);
  RiemannTensor P = perturb_component(R, 0, 1, 2, 3, Scalar(1));
  EXPECT_TRUE(validate_riemann(P).empty());
  EXPECT_NE(P, R);
}

TEST(Riemann, JsonRoundTrip) {
  RiemannTensor R = random_riemann(7, 3).scaled(Scalar::rational(1, 3));
  std::string text = riemann_to_json(R);
  EXPECT_EQ(riemann_from_json(text), R);
  EXPECT_THROW(riemann_from_json("{\"n\": 2}"), std::invalid_argument);
  RiemannTensor F = riemann_from_json(R"({"n": 1, "components": [[0,1,1,0,0.5,1]]})");
  EXPECT_EQ(F.mode(), ScalarMode::floating);
  EXPECT_DOUBLE_EQ(F(0, 1, 1, 0).to_double(), 0.5);
}

TEST(Riemann, ArithmeticModeIsolation) {
  RiemannTensor a = random_riemann(1, 2), b = a.to_mode(ScalarMode::floating);
  EXPECT_THROW(a + b, ArithmeticModeError);
  EXPECT_EQ((a - a).max_abs(), Scalar(0));
}
