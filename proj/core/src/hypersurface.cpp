#include "griffiths/hypersurface.hpp"

#include <functional>
#include <stdexcept>

namespace griffiths {

namespace {

void require_square(const ScalarMatrix& A) {
  if (!A.is_square() || A.rows() == 0) throw std::invalid_argument("shape operator must be a nonempty square matrix");
}

// Coefficients c_0..c_n of det(t I - A).
std::vector<Scalar> characteristic(const ScalarMatrix& A) {
  require_square(A);
  const std::size_t n = A.rows();
  const ScalarMode mode = A.mode();
  std::vector<Scalar> c(n + 1, Scalar::zero(mode));
  c[n] = Scalar::one(mode);
  ScalarMatrix M(n, n, mode);
  const ScalarMatrix I = ScalarMatrix::identity(n, mode);
  for (std::size_t k = 1; k <= n; ++k) {
    M = A * M + I.scaled(c[n - k + 1]);
    ScalarMatrix AM = A * M;
    Scalar trace = Scalar::zero(mode);
    for (std::size_t j = 0; j < n; ++j) trace += AM(j, j);
    c[n - k] = -trace / Scalar::integer(static_cast<long>(k), mode);
  }
  return c;
}

}  // namespace

AmbientData AmbientData::space_form(int n, const Scalar& k) {
  return {k * Scalar::integer(n * (n + 1), k.mode()), k * Scalar::integer(n, k.mode()), k};
}

Scalar sigma(int i, const ScalarMatrix& A) {
  require_square(A);
  const int n = static_cast<int>(A.rows());
  if (i < 0 || i > n) return Scalar::zero(A.mode());
  Scalar coef = characteristic(A)[static_cast<std::size_t>(n - i)];
  return i % 2 == 0 ? coef : -coef;
}

Scalar sigma_minors(int i, const ScalarMatrix& A) {
  require_square(A);
  const int n = static_cast<int>(A.rows());
  if (i < 0 || i > n) return Scalar::zero(A.mode());
  if (i == 0) return Scalar::one(A.mode());
  Scalar total = Scalar::zero(A.mode());
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == i) {
      ScalarMatrix minor(static_cast<std::size_t>(i), static_cast<std::size_t>(i), A.mode());
      for (int r = 0; r < i; ++r)
        for (int c = 0; c < i; ++c) minor(r, c) = A(chosen[r], chosen[c]);
      total += determinant(minor);
      return;
    }
    for (int j = start; j < n; ++j) {
      chosen.push_back(j);
      rec(j + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return total;
}

ExteriorForm pullback_form(const ScalarMatrix& A, const ExteriorForm& form) {
  require_square(A);
  const int n = static_cast<int>(A.rows());
  if (form.dim() != 2 * n + 1) throw std::invalid_argument("pullback_form: form is not on the (2n+1)-coframe");
  if (form.mode() != A.mode()) throw ArithmeticModeError("pullback_form: mode mismatch");
  const ScalarMode mode = A.mode();
  std::vector<ExteriorForm> image(static_cast<std::size_t>(2 * n + 1));
  image[0] = ExteriorForm(n, 1, mode);
  for (int j = 1; j <= n; ++j) {
    image[j] = ExteriorForm::covector(n, j - 1, Scalar::one(mode));
    ExteriorForm vertical(n, 1, mode);
    for (int k = 1; k <= n; ++k) vertical.accumulate(MultiIndex{k - 1}, -A(j - 1, k - 1));
    image[j + n] = vertical;
  }
  ExteriorForm out(n, form.degree(), mode);
  if (form.degree() > n) return out;
  for (const auto& [index, coef] : form.terms()) {
    ExteriorForm term = ExteriorForm::constant(n, coef);
    for (int j : index.indices()) {
      term = wedge(term, image[static_cast<std::size_t>(j)]);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

Scalar pullback_alpha(int i, const ScalarMatrix& A) {
  require_square(A);
  const int n = static_cast<int>(A.rows());
  if (i < 0 || i > n) return Scalar::zero(A.mode());
  Scalar value = sigma(n - i, A);
  return (n - i) % 2 == 0 ? value : -value;
}

ELResiduals el_residuals(const ScalarMatrix& A, const AmbientData& ambient) {
  ELResiduals out{sigma(1, A), Scalar::integer(2, A.mode()) * sigma(2, A) - ambient.r_nu.to_mode(A.mode()), std::nullopt};
  if (ambient.k) out.scal = scal_residual(A, ambient);
  return out;
}

Scalar scal_residual(const ScalarMatrix& A, const AmbientData& ambient) {
  if (!ambient.k) throw std::invalid_argument("scalar-curvature residual needs the ambient sectional curvature k");
  const int n = static_cast<int>(A.rows());
  const ScalarMode mode = A.mode();
  return Scalar::integer(6, mode) * sigma(3, A) +
         ambient.k->to_mode(mode) * Scalar::integer((n - 1) * (n - 2), mode) * sigma(1, A);
}

Scalar gauss_scal(const ScalarMatrix& A, const AmbientData& ambient) {
  const ScalarMode mode = A.mode();
  return ambient.scalM.to_mode(mode) - Scalar::integer(2, mode) * ambient.r_nu.to_mode(mode) +
         Scalar::integer(2, mode) * sigma(2, A);
}

Scalar weingarten_density(const Scalar& t, const ScalarMatrix& A) {
  require_square(A);
  const std::size_t n = A.rows();
  ScalarMatrix M = A.scaled(Scalar::integer(-1, A.mode()));
  for (std::size_t j = 0; j < n; ++j) M(j, j) += t.to_mode(A.mode());
  return determinant(M);
}

}  // namespace griffiths
