#include "griffiths/metrics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace griffiths {

namespace {

ScalarMode vector_mode(const ScalarVector& v) {
  if (v.empty()) throw std::invalid_argument("empty direction vector");
  ScalarMode mode = v.front().mode();
  for (const auto& x : v)
    if (x.mode() != mode) throw ArithmeticModeError("direction vector mixes exact and floating entries");
  return mode;
}

}  // namespace

ScalarVector normalize_direction(const ScalarVector& v) {
  const ScalarMode mode = vector_mode(v);
  Scalar norm2 = dot(v, v);
  if (norm2.is_zero()) throw std::invalid_argument("direction vector is zero");
  if (mode == ScalarMode::exact) {
    Rational root;
    if (exact_sqrt(norm2.exact(), root)) {
      ScalarVector out;
      for (const auto& x : v) out.push_back(x / Scalar(root));
      return out;
    }
  }
  const double norm = std::sqrt(norm2.to_double());
  ScalarVector out;
  for (const auto& x : v) out.push_back(Scalar::real(x.to_double() / norm));
  return out;
}

ScalarMatrix adapt_frame(const ScalarVector& u) {
  const ScalarMode mode = vector_mode(u);
  const std::size_t m = u.size();
  Scalar norm2 = dot(u, u);
  if (norm2.is_zero()) throw std::invalid_argument("adapt_frame: zero vector");
  if (mode == ScalarMode::exact ? norm2 != Scalar(1) : std::abs(norm2.to_double() - 1.0) > 1e-12)
    throw std::invalid_argument("adapt_frame: direction is not a unit vector");

  std::size_t k = 0;
  for (std::size_t j = 1; j < m; ++j)
    if (u[k].abs() < u[j].abs()) k = j;

  ScalarVector w = u;
  w[k] -= Scalar::one(mode);
  Scalar ww = dot(w, w);
  ScalarMatrix H = ScalarMatrix::identity(m, mode);
  if (!ww.is_zero()) {
    Scalar factor = Scalar::integer(2, mode) / ww;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) H(r, c) -= factor * w[r] * w[c];
  }

  ScalarMatrix O(m, m, mode);
  for (std::size_t c = 0; c < m; ++c) O(0, c) = u[c];
  std::size_t row = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (j == k) continue;
    for (std::size_t c = 0; c < m; ++c) O(row, c) = H(c, j);
    ++row;
  }
  if (determinant(O).sign() < 0)
    for (std::size_t c = 0; c < m; ++c) O(m - 1, c) = -O(m - 1, c);
  return O;
}

RiemannTensor rotate_riemann(const RiemannTensor& R, const ScalarMatrix& O) {
  const int m = R.dim();
  if (O.rows() != static_cast<std::size_t>(m) || !O.is_square())
    throw std::invalid_argument("rotate_riemann: rotation has the wrong size");
  if (O.mode() != R.mode()) throw ArithmeticModeError("rotate_riemann: mode mismatch");
  // Contract one slot at a time; the contracted slot moves to the back.
  RiemannTensor current = R;
  for (int pass = 0; pass < 4; ++pass) {
    RiemannTensor next(R.n(), R.mode());
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          for (int p = 0; p < m; ++p) {
            const Scalar& x = current(p, b, c, d);
            if (x.is_zero()) continue;
            for (int a = 0; a < m; ++a)
              if (!O(a, p).is_zero()) next.at(b, c, d, a) += O(a, p) * x;
          }
    current = std::move(next);
  }
  return current;
}

RiemannTensor product_spheres_riemann(const Scalar& k1, const Scalar& k2, int d1, int d2, const ScalarVector& u) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("product_spheres_riemann: factor dimensions must be positive");
  if (static_cast<int>(u.size()) != d1 + d2)
    throw std::invalid_argument("product_spheres_riemann: direction length must equal d1 + d2");
  const ScalarMode mode = vector_mode(u);
  const Scalar a = k1.to_mode(mode), b = k2.to_mode(mode);
  RiemannTensor R(d1 + d2 - 1, mode);
  auto fill = [&](int lo, int hi, const Scalar& k) {
    for (int i = lo; i < hi; ++i)
      for (int j = lo; j < hi; ++j)
        if (i != j) R.set(i, j, j, i, k);
  };
  fill(0, d1, a);
  fill(d1, d1 + d2, b);
  return rotate_riemann(R, adapt_frame(u));
}

std::vector<ScalarVector> fiber_probes(int dim, ScalarMode mode, int extra, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("fiber_probes: dimension must be positive");
  std::vector<ScalarVector> probes;
  auto axis = [&](int j) {
    ScalarVector v(dim, Scalar(0));
    v[j] = Scalar(1);
    return v;
  };
  for (int j = 0; j < dim; ++j) probes.push_back(axis(j));
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      ScalarVector v(dim, Scalar(0));
      v[a] = Scalar::rational(3, 5);
      v[b] = Scalar::rational(4, 5);
      probes.push_back(std::move(v));
    }
  std::mt19937_64 gen(seed);
  for (int e = 0; e < extra && dim > 1; ++e) {
    ScalarVector t;
    Scalar t2(0);
    for (int j = 1; j < dim; ++j) {
      t.push_back(Scalar::rational(static_cast<long>(gen() % 13) - 6, 5));
      t2 += t.back() * t.back();
    }
    Scalar denom = Scalar(1) + t2;
    ScalarVector v;
    v.push_back((Scalar(1) - t2) / denom);
    for (const auto& x : t) v.push_back(Scalar(2) * x / denom);
    probes.push_back(std::move(v));
  }
  if (mode == ScalarMode::floating)
    for (auto& v : probes)
      for (auto& x : v) x = x.to_mode(mode);
  return probes;
}

ChartMetric named_chart_metric(const std::string& name, int dim) {
  if (dim < 2) throw std::invalid_argument("chart metric dimension must be at least 2");
  ChartMetric metric;
  metric.dim = dim;
  if (name == "euclidean") {
    metric.g = [dim](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(dim, dim); };
  } else if (name == "sphere-stereographic") {
    metric.g = [dim](const Eigen::VectorXd& x) {
      double f = 2.0 / (1.0 + x.squaredNorm());
      return Eigen::MatrixXd(f * f * Eigen::MatrixXd::Identity(dim, dim));
    };
  } else if (name == "hyperbolic-ball") {
    metric.g = [dim](const Eigen::VectorXd& x) {
      double f = 2.0 / (1.0 - x.squaredNorm());
      return Eigen::MatrixXd(f * f * Eigen::MatrixXd::Identity(dim, dim));
    };
  } else {
    throw std::invalid_argument("unknown chart metric: " + name);
  }
  return metric;
}

namespace {

class Tensor4 {
 public:
  explicit Tensor4(int m) : m_(m), data_(static_cast<std::size_t>(m * m * m * m), 0.0) {}
  double& operator()(int a, int b, int c, int d) { return data_[((a * m_ + b) * m_ + c) * m_ + d]; }
  double operator()(int a, int b, int c, int d) const { return data_[((a * m_ + b) * m_ + c) * m_ + d]; }

 private:
  int m_;
  std::vector<double> data_;
};

Eigen::MatrixXd checked_metric(const ChartMetric& metric, const Eigen::VectorXd& x) {
  Eigen::MatrixXd g = metric.g(x);
  if (g.rows() != metric.dim || g.cols() != metric.dim) throw std::invalid_argument("chart metric has the wrong size");
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success || (g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("chart metric is not symmetric positive definite");
  return g;
}

// gamma[l][j][k] flattened as l*m*m + j*m + k.
std::vector<double> christoffel(const ChartMetric& metric, const Eigen::VectorXd& x, double h) {
  const int m = metric.dim;
  std::vector<Eigen::MatrixXd> dg(m);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd step = Eigen::VectorXd::Zero(m);
    step(i) = h;
    dg[i] = (checked_metric(metric, x + step) - checked_metric(metric, x - step)) / (2.0 * h);
  }
  Eigen::MatrixXd ginv = checked_metric(metric, x).inverse();
  std::vector<double> gamma(static_cast<std::size_t>(m * m * m), 0.0);
  for (int l = 0; l < m; ++l)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        double acc = 0.0;
        for (int q = 0; q < m; ++q) acc += ginv(l, q) * (dg[j](q, k) + dg[k](q, j) - dg[q](j, k));
        gamma[(l * m + j) * m + k] = 0.5 * acc;
      }
  return gamma;
}

// Frame components R_{abcd} with respect to the columns of F.
Tensor4 frame_riemann(const ChartMetric& metric, const Eigen::VectorXd& x, double h, const Eigen::MatrixXd& F) {
  const int m = metric.dim;
  auto G = [m](const std::vector<double>& gamma, int l, int j, int k) { return gamma[(l * m + j) * m + k]; };
  std::vector<double> gamma = christoffel(metric, x, h);
  std::vector<std::vector<double>> dgamma(m);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd step = Eigen::VectorXd::Zero(m);
    step(i) = h;
    std::vector<double> plus = christoffel(metric, x + step, h), minus = christoffel(metric, x - step, h);
    dgamma[i].resize(plus.size());
    for (std::size_t t = 0; t < plus.size(); ++t) dgamma[i][t] = (plus[t] - minus[t]) / (2.0 * h);
  }
  Tensor4 up(m);
  for (int l = 0; l < m; ++l)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          double v = G(dgamma[i], l, j, k) - G(dgamma[j], l, i, k);
          for (int q = 0; q < m; ++q) v += G(gamma, l, i, q) * G(gamma, q, j, k) - G(gamma, l, j, q) * G(gamma, q, i, k);
          up(l, i, j, k) = v;
        }
  Eigen::MatrixXd g = checked_metric(metric, x);
  Tensor4 low(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          double v = 0.0;
          for (int q = 0; q < m; ++q) v += g(l, q) * up(q, i, j, k);
          low(i, j, k, l) = v;
        }
  // Successive single-slot contractions with F; the contracted slot moves to the back.
  Tensor4 current = low;
  for (int pass = 0; pass < 4; ++pass) {
    Tensor4 next(m);
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          for (int a = 0; a < m; ++a) {
            double v = 0.0;
            for (int p = 0; p < m; ++p) v += F(p, a) * current(p, b, c, d);
            next(b, c, d, a) = v;
          }
    current = next;
  }
  return current;
}

}  // namespace

ChartCurvature chart_riemann_fd(const ChartMetric& metric, const Eigen::VectorXd& x, double h) {
  const int m = metric.dim;
  if (x.size() != m) throw std::invalid_argument("chart_riemann_fd: point has the wrong dimension");
  if (!(h > 0.0)) throw std::invalid_argument("chart_riemann_fd: step must be positive");
  Eigen::MatrixXd g = checked_metric(metric, x);
  Eigen::MatrixXd L = Eigen::LLT<Eigen::MatrixXd>(g).matrixL();
  Eigen::MatrixXd F = L.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(m, m));

  Tensor4 coarse = frame_riemann(metric, x, h, F);
  Tensor4 fine = frame_riemann(metric, x, 0.5 * h, F);
  ChartCurvature out;
  RiemannTensor raw(m - 1, ScalarMode::floating);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          out.richardson_gap = std::max(out.richardson_gap, std::abs(coarse(a, b, c, d) - fine(a, b, c, d)));
          raw.at(a, b, c, d) = Scalar::real((4.0 * fine(a, b, c, d) - coarse(a, b, c, d)) / 3.0);
        }
  out.richardson_ok = out.richardson_gap < 1e-5;
  out.R = symmetrize_riemann(raw);
  return out;
}

}  // namespace griffiths
