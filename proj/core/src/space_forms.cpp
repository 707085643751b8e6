#include "griffiths/space_forms.hpp"

#include <string>

#include "griffiths/griffiths_forms.hpp"

namespace griffiths {

RiemannTensor riemann_csc(const Scalar& k, int n) {
  RiemannTensor R(n, k.mode());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) R.set(i, j, j, i, k);
  return R;
}

Report verify_csc(const Scalar& k, const Scalar& s, int n) {
  const ScalarMode mode = s.mode();
  const Scalar kk = k.to_mode(mode);
  const RiemannTensor R = riemann_csc(kk, n);
  GriffithsSystem sys(FrameContext(n, s));
  Report report;
  report.add("riemann_symmetries", validate_riemann(R).empty());
  for (int i = 0; i <= n; ++i) {
    const std::string tag = "[" + std::to_string(i) + "]";
    ExteriorForm expected = sys.alpha(i - 1) * (Scalar::integer(n - i + 1, mode) / (s * s)) -
                            sys.alpha(i + 1) * (kk * Scalar::integer(i + 1, mode));
    report.add_form("d_alpha_csc" + tag, sys.d_alpha(R, i) - wedge(sys.theta(), expected));
    report.add_form("r_alpha_csc" + tag,
                    sys.r_alpha(R, i) + wedge(sys.theta(), sys.alpha(i + 1)) * (kk * Scalar::integer(i + 1, mode)));
    report.add_form("coclosed" + tag, sys.d_star_alpha(R, i));
  }
  report.add_form("r_alpha_n_minus_1_csc", sys.r_alpha(R, n - 1) + sys.vol() * (s * kk * Scalar::integer(n, mode)));
  if (n == 1) report.add_form("dtheta_is_alpha0_alpha1", sys.d_theta() - wedge(sys.alpha(0), sys.alpha(1)));
  return report;
}

bool is_space_form_tensor(const RiemannTensor& R, double tol) {
  RiemannTensor model = riemann_csc(R(0, 1, 1, 0), R.n());
  return residual_negligible(R.max_abs_difference(model), tol);
}

}  // namespace griffiths
