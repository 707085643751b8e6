#pragma once

#include <vector>

#include "griffiths/exterior.hpp"
#include "griffiths/linalg.hpp"
#include "griffiths/report.hpp"
#include "griffiths/riemann.hpp"
#include "griffiths/scalar.hpp"

namespace griffiths {

/// dim M = n + 1, dim SM_s = 2n + 1, sphere radius s > 0.
struct FrameContext {
  int n = 1;
  Scalar s = Scalar(1);

  FrameContext() = default;
  FrameContext(int n_, Scalar s_);

  int dim() const { return 2 * n + 1; }
  ScalarMode mode() const { return s.mode(); }
};

/// Matrix of B on the (2n+1)-frame: e_j -> e_{j+n} for 1 <= j <= n, zero elsewhere.
/// Entry (r, c) is e^r(B e_c).
ScalarMatrix b_endomorphism(int n, ScalarMode mode = ScalarMode::exact);

/// eta o (B_1 ^ ... ^ B_p) by direct summation over S_p.
ExteriorForm b_contraction(const ExteriorForm& eta, const std::vector<ScalarMatrix>& endos);

/// n_i = 1 / (i! (n-i)!).
Scalar griffiths_coefficient(int n, int i, ScalarMode mode = ScalarMode::exact);

/// alpha_i = n_i alpha_0 o (B^i ^ 1^{n-i}); zero form when i is outside [0, n].
ExteriorForm alpha_bruteforce(int n, int i, ScalarMode mode = ScalarMode::exact);

/// Same form by subset enumeration.
ExteriorForm alpha_fast(int n, int i, ScalarMode mode = ScalarMode::exact);

class GriffithsSystem {
 public:
  explicit GriffithsSystem(FrameContext ctx);

  const FrameContext& context() const { return ctx_; }
  int n() const { return ctx_.n; }
  int dim() const { return ctx_.dim(); }
  const Scalar& s() const { return ctx_.s; }
  ScalarMode mode() const { return ctx_.mode(); }

  const ExteriorForm& theta() const { return theta_; }
  const ExteriorForm& d_theta() const { return d_theta_; }
  const ExteriorForm& vol() const { return vol_; }
  /// alpha_i for 0 <= i <= n; the zero n-form otherwise.
  ExteriorForm alpha(int i) const;

  ExteriorForm r_alpha(const RiemannTensor& R, int i) const;
  ExteriorForm d_alpha(const RiemannTensor& R, int i) const;
  /// d(* alpha_i); alpha_i is coclosed at this point iff the result vanishes.
  ExteriorForm d_star_alpha(const RiemannTensor& R, int i) const;
  /// d(* sum_i coefficients[i] alpha_i).
  ExteriorForm d_star_combination(const RiemannTensor& R, const ScalarVector& coefficients) const;

  bool is_negligible(const ExteriorForm& f, double tol = 1e-10) const;

 private:
  void require_tensor(const RiemannTensor& R) const;

  FrameContext ctx_;
  ExteriorForm theta_, d_theta_, vol_;
  std::vector<ExteriorForm> alphas_;
};

/// Checks the basic structure equations and the curvature consequences at the
/// frame of R. Float tensors use tolerance `tol`.
Report structure_report(const RiemannTensor& R, const Scalar& s, double tol = 1e-10);

/// Psi = sum_i b_i ((n+1-i)/s^2 alpha_{i-1} - k (i+1) alpha_{i+1}).
ExteriorForm euler_lagrange_form(int n, const ScalarVector& b, const Scalar& k, const Scalar& s);

/// True when d*(sum c_i alpha_i) vanishes at every probe direction of
/// fiber_probes, R being rotated into the frame adapted to each probe.
bool coclosed_on_fibers(const RiemannTensor& R, const Scalar& s, const ScalarVector& coefficients,
                        double tol = 1e-10);

/// coclosed_on_fibers for the single form alpha_i.
bool alpha_coclosed_on_fibers(const RiemannTensor& R, const Scalar& s, int i, double tol = 1e-10);

}  // namespace griffiths
