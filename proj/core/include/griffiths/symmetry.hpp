#pragma once

#include <string>
#include <vector>

#include "griffiths/exterior.hpp"
#include "griffiths/linalg.hpp"
#include "griffiths/polynomial.hpp"
#include "griffiths/report.hpp"
#include "griffiths/scalar.hpp"

namespace griffiths {

/// Tridiagonal (n+1)x(n+1) matrix: L_jj = -c, L_{j,j+1} = n - j, L_{j+1,j} = -(j+1) eps.
ScalarMatrix symmetry_matrix(int n, const Scalar& eps, const Scalar& c);

/// det L as a polynomial in c, by the continuant recurrence.
Polynomial det_L(int n, const Rational& eps);

/// Odd n: prod_{j odd} (c^2 + j^2 eps). Even n: -c prod_{j even, j > 0} (c^2 + j^2 eps).
Polynomial det_L_closed(int n, const Rational& eps);

/// Factored form of det_L_closed with eps symbolic, e.g. "−c(c²+4ε)".
std::string det_L_closed_string(int n);

struct SymmetrySolution {
  Scalar c;
  ScalarVector X;  // coefficients of Lambda = sum_j X_j alpha_j
};

/// Every real root c of det L (eps = s^2 k) with a null-space basis of L(c).
/// Exact when -eps is a rational square or zero; floating otherwise.
std::vector<SymmetrySolution> symmetry_solutions(int n, const Scalar& k, const Scalar& s, double tol = 1e-10);

/// d Lambda on the space form of curvature k.
ExteriorForm symmetry_form_differential(int n, const ScalarVector& X, const Scalar& k, const Scalar& s);

/// (s e_0) interior d Lambda - c Lambda; zero for a symmetry with eigenvalue c.
ExteriorForm lie_derivative_check(int n, const ScalarVector& X, const Scalar& c, const Scalar& k, const Scalar& s);

/// Determinant identity plus a Lie-derivative check for every solution.
Report symmetry_report(int n, const Scalar& k, const Scalar& s, double tol = 1e-10);

}  // namespace griffiths
