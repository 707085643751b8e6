#include "griffiths/symmetry.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>
#include <stdexcept>

#include "griffiths/griffiths_forms.hpp"
#include "griffiths/space_forms.hpp"

namespace griffiths {

ScalarMatrix symmetry_matrix(int n, const Scalar& eps, const Scalar& c) {
  if (n < 1) throw std::invalid_argument("symmetry_matrix: n must be at least 1");
  const ScalarMode mode = c.mode();
  const Scalar e = eps.to_mode(mode);
  const auto m = static_cast<std::size_t>(n + 1);
  ScalarMatrix L(m, m, mode);
  for (int j = 0; j <= n; ++j) {
    L(j, j) = -c;
    if (j < n) {
      L(j, j + 1) = Scalar::integer(n - j, mode);
      L(j + 1, j) = -(e * Scalar::integer(j + 1, mode));
    }
  }
  return L;
}

Polynomial det_L(int n, const Rational& eps) {
  if (n < 1) throw std::invalid_argument("det_L: n must be at least 1");
  const Polynomial minus_c({Rational(0), Rational(-1)});
  Polynomial before = Polynomial::constant(1);
  Polynomial current = minus_c;
  // current = D_m, the determinant of the leading (m+1)x(m+1) block.
  for (int m = 1; m <= n; ++m) {
    Polynomial next = minus_c * current + before * (eps * Rational(m) * Rational(n - m + 1));
    before = current;
    current = next;
  }
  return current;
}

Polynomial det_L_closed(int n, const Rational& eps) {
  if (n < 1) throw std::invalid_argument("det_L_closed: n must be at least 1");
  Polynomial out = n % 2 == 0 ? Polynomial({Rational(0), Rational(-1)}) : Polynomial::constant(1);
  for (int j = n % 2 == 0 ? 2 : 1; j <= n; j += 2)
    out = out * Polynomial({eps * Rational(j * j), Rational(0), Rational(1)});
  return out;
}

std::string det_L_closed_string(int n) {
  if (n < 1) throw std::invalid_argument("det_L_closed_string: n must be at least 1");
  std::string out = n % 2 == 0 ? "−c" : "";
  for (int j = n % 2 == 0 ? 2 : 1; j <= n; j += 2)
    out += "(c²+" + (j == 1 ? std::string() : std::to_string(j * j)) + "ε)";
  return out;
}

namespace {

std::vector<ScalarVector> float_null_space(const ScalarMatrix& L, double tol) {
  const int m = static_cast<int>(L.rows());
  Eigen::MatrixXd Lt(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) Lt(c, r) = L(r, c).to_double();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Lt);
  qr.setThreshold(tol);
  Eigen::MatrixXd Q = qr.householderQ();
  std::vector<ScalarVector> basis;
  for (int col = static_cast<int>(qr.rank()); col < m; ++col) {
    ScalarVector v;
    for (int r = 0; r < m; ++r) v.push_back(Scalar::real(Q(r, col)));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<SymmetrySolution> symmetry_solutions(int n, const Scalar& k, const Scalar& s, double tol) {
  if (n < 1) throw std::invalid_argument("symmetry_solutions: n must be at least 1");
  const Scalar eps = s * s * k.to_mode(s.mode());
  const Scalar minus_eps = -eps;
  std::vector<int> multipliers;
  for (int j = n % 2 == 0 ? 0 : 1; j <= n; j += 2) multipliers.push_back(j);

  std::vector<Scalar> roots;
  ScalarMode mode = eps.mode();
  if (eps.is_zero()) {
    roots.push_back(Scalar::zero(mode));
  } else if (minus_eps.sign() < 0) {
    if (n % 2 == 0) roots.push_back(Scalar::zero(mode));
  } else {
    Rational root;
    if (eps.is_exact() && exact_sqrt(minus_eps.exact(), root)) {
      std::set<Rational> seen;
      for (int j : multipliers) {
        seen.insert(root * j);
        seen.insert(-root * j);
      }
      for (const auto& c : seen) roots.emplace_back(c);
    } else {
      mode = ScalarMode::floating;
      const double r = std::sqrt(minus_eps.to_double());
      std::set<double> seen;
      for (int j : multipliers) {
        seen.insert(r * j);
        seen.insert(-r * j);
      }
      for (double c : seen) roots.push_back(Scalar::real(c));
    }
  }

  std::vector<SymmetrySolution> out;
  for (const auto& c : roots) {
    ScalarMatrix L = symmetry_matrix(n, eps.to_mode(mode), c.to_mode(mode));
    std::vector<ScalarVector> basis = mode == ScalarMode::exact ? null_space(L) : float_null_space(L, tol);
    for (auto& X : basis) out.push_back({c.to_mode(mode), std::move(X)});
  }
  return out;
}

ExteriorForm symmetry_form_differential(int n, const ScalarVector& X, const Scalar& k, const Scalar& s) {
  if (static_cast<int>(X.size()) != n + 1) throw std::invalid_argument("symmetry: need n + 1 coefficients");
  const ScalarMode mode = X.front().mode();
  const Scalar ss = s.to_mode(mode);
  GriffithsSystem sys(FrameContext(n, ss));
  RiemannTensor R = riemann_csc(k.to_mode(mode), n);
  ExteriorForm d_lambda(sys.dim(), n + 1, mode);
  for (int j = 0; j <= n; ++j)
    if (!X[static_cast<std::size_t>(j)].is_zero()) d_lambda += sys.d_alpha(R, j) * X[static_cast<std::size_t>(j)];
  return d_lambda;
}

ExteriorForm lie_derivative_check(int n, const ScalarVector& X, const Scalar& c, const Scalar& k, const Scalar& s) {
  if (static_cast<int>(X.size()) != n + 1) throw std::invalid_argument("symmetry: need n + 1 coefficients");
  const ScalarMode mode = X.front().mode();
  const Scalar ss = s.to_mode(mode);
  ExteriorForm lambda(2 * n + 1, n, mode);
  for (int j = 0; j <= n; ++j) lambda += alpha_fast(n, j, mode) * X[static_cast<std::size_t>(j)];
  ExteriorForm flow = interior(0, symmetry_form_differential(n, X, k, s)) * ss;
  return flow - lambda * c.to_mode(mode);
}

Report symmetry_report(int n, const Scalar& k, const Scalar& s, double tol) {
  Report report;
  if (k.is_exact() && s.is_exact()) {
    const Rational eps = s.exact() * s.exact() * k.exact();
    report.add("det_L_matches_closed_form", det_L(n, eps) == det_L_closed(n, eps));
    report.add("det_L_symbolic_matches_closed_form", det_L(n, 1) == det_L_closed(n, 1));
  }
  for (const auto& sol : symmetry_solutions(n, k, s, tol)) {
    const std::string tag = "[c=" + sol.c.str() + "]";
    report.add_form("lie_derivative" + tag, lie_derivative_check(n, sol.X, sol.c, k, s), tol);
    if (sol.c.is_zero()) report.add_form("closed_at_zero" + tag, symmetry_form_differential(n, sol.X, k, s), tol);
  }
  return report;
}

}  // namespace griffiths
