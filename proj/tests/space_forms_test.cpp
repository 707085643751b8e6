#include <gtest/gtest.h>

#include "griffiths/griffiths_forms.hpp"
#include "griffiths/space_forms.hpp"

using namespace griffiths;

TEST(VerifyCsc, Fixtures) {
  EXPECT_TRUE(verify_csc(Scalar(1), Scalar(1), 3).all_pass());
  EXPECT_TRUE(verify_csc(Scalar(-2), Scalar::rational(1, 2), 4).all_pass());
  Report surface = verify_csc(Scalar(1), Scalar(1), 1);
  EXPECT_TRUE(surface.all_pass());
  bool has_dtheta = false;
  for (const auto& c : surface.checks()) has_dtheta |= c.name == "dtheta_is_alpha0_alpha1";
  EXPECT_TRUE(has_dtheta);
}

TEST(VerifyCsc, AllSmallDimensions) {
  for (int n = 1; n <= 5; ++n)
    for (const Scalar& k : {Scalar(0), Scalar(3), Scalar::rational(-1, 4)})
      for (const Scalar& s : {Scalar(1), Scalar::rational(2, 3)}) EXPECT_TRUE(verify_csc(k, s, n).all_pass());
}

TEST(SpaceFormTensor, Recognition) {
  EXPECT_TRUE(is_space_form_tensor(riemann_csc(Scalar(2), 3)));
  EXPECT_TRUE(is_space_form_tensor(RiemannTensor(2)));
  EXPECT_FALSE(is_space_form_tensor(random_riemann(1, 3)));
  EXPECT_FALSE(is_space_form_tensor(einstein_project(random_riemann(1, 3))));
  RiemannTensor F = riemann_csc(Scalar(1), 2).to_mode(ScalarMode::floating);
  F.at(0, 1, 1, 0) = Scalar::real(1.0 + 1e-13);
  EXPECT_TRUE(is_space_form_tensor(F, 1e-10));
}

TEST(SpaceForm, MutationBreaksCoclosure) {
  // Any single-component perturbation of a space form loses some coclosed alpha_i.
  for (int n = 2; n <= 4; ++n) {
    RiemannTensor base = riemann_csc(Scalar(1), n);
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = 0; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d) {
            if (std::make_pair(a, b) > std::make_pair(c, d)) continue;
            RiemannTensor P = perturb_component(base, a, b, c, d, Scalar::rational(1, 3));
            if (P == base) continue;
            bool all = true;
            for (int i = 0; i <= n && all; ++i) all = alpha_coclosed_on_fibers(P, Scalar(1), i);
            EXPECT_FALSE(all) << n << ": " << a << b << c << d;
          }
  }
}
