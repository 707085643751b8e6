#pragma once

#include <optional>

#include "griffiths/exterior.hpp"
#include "griffiths/linalg.hpp"
#include "griffiths/scalar.hpp"

namespace griffiths {

struct AmbientData {
  Scalar scalM;
  Scalar r_nu;                 // Ric(nu, nu)
  std::optional<Scalar> k;     // set when the ambient is a space form

  /// Space form of curvature k: scalM = n(n+1)k, r_nu = nk.
  static AmbientData space_form(int n, const Scalar& k);
};

/// Elementary symmetric polynomial of the eigenvalues, from the
/// characteristic polynomial (Faddeev-LeVerrier).
Scalar sigma(int i, const ScalarMatrix& A);

/// Same value as a sum of principal i x i minors.
Scalar sigma_minors(int i, const ScalarMatrix& A);

/// Pullback along the normal lift: e^0 -> 0, e^j -> e^{j-1}, e^{j+n} -> -sum_k A_jk e^{k-1},
/// giving a form on the n-dimensional coframe of N. A need not be symmetric.
ExteriorForm pullback_form(const ScalarMatrix& A, const ExteriorForm& form);

/// Density of the pullback of alpha_i against vol_N: (-1)^{n-i} sigma_{n-i}(A).
Scalar pullback_alpha(int i, const ScalarMatrix& A);

struct ELResiduals {
  Scalar volume;               // sigma_1
  Scalar mean;                 // 2 sigma_2 - r_nu
  std::optional<Scalar> scal;  // 6 sigma_3 + k (n-1)(n-2) sigma_1, when k is known
};

ELResiduals el_residuals(const ScalarMatrix& A, const AmbientData& ambient);

/// Requires ambient.k.
Scalar scal_residual(const ScalarMatrix& A, const AmbientData& ambient);

/// Scal^N = scalM - 2 r_nu + 2 sigma_2.
Scalar gauss_scal(const ScalarMatrix& A, const AmbientData& ambient);

/// det(t I - A).
Scalar weingarten_density(const Scalar& t, const ScalarMatrix& A);

}  // namespace griffiths
