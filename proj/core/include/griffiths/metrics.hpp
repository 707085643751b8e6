#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "griffiths/linalg.hpp"
#include "griffiths/riemann.hpp"

namespace griffiths {

/// Orthogonal (n+1)x(n+1) matrix whose rows are the adapted frame written in
/// the reference frame; row 0 is u. Householder completion, exact for rational u.
ScalarMatrix adapt_frame(const ScalarVector& u);

/// Unit vector along v: exact when |v|^2 is a rational square, floating otherwise.
ScalarVector normalize_direction(const ScalarVector& v);

/// R'_{abcd} = sum O_ap O_bq O_cr O_dt R_pqrt.
RiemannTensor rotate_riemann(const RiemannTensor& R, const ScalarMatrix& O);

/// S^{d1}(k1) x S^{d2}(k2) curvature at a point, expressed in adapt_frame(u).
RiemannTensor product_spheres_riemann(const Scalar& k1, const Scalar& k2, int d1, int d2, const ScalarVector& u);

/// Deterministic unit directions: coordinate axes, (3e_a + 4e_b)/5 for a < b,
/// and `extra` stereographic images of random rational points. Exact unless
/// `mode` is floating.
std::vector<ScalarVector> fiber_probes(int dim, ScalarMode mode = ScalarMode::exact, int extra = 4,
                                       std::uint64_t seed = 7);

struct ChartMetric {
  int dim = 0;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> g;
};

/// "euclidean", "sphere-stereographic" (4 delta / (1+|x|^2)^2) or
/// "hyperbolic-ball" (4 delta / (1-|x|^2)^2).
ChartMetric named_chart_metric(const std::string& name, int dim);

struct ChartCurvature {
  RiemannTensor R;              // floating, orthonormal Cholesky frame at x
  double richardson_gap = 0.0;  // max |R(h) - R(h/2)|
  bool richardson_ok = false;   // gap below 1e-5
};

/// Curvature by central differences at steps h and h/2, Richardson
/// extrapolated and projected onto algebraic curvature tensors.
ChartCurvature chart_riemann_fd(const ChartMetric& metric, const Eigen::VectorXd& x, double h = 1e-3);

}  // namespace griffiths
