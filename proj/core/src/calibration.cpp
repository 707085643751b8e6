#include "griffiths/calibration.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "griffiths/griffiths_forms.hpp"

namespace griffiths {

ExteriorForm gwistor_phi(ScalarMode mode) {
  GriffithsSystem sys(FrameContext(3, Scalar::one(mode)));
  return wedge(sys.theta(), sys.d_theta()) + sys.alpha(2) - sys.alpha(0);
}

CoclosureDiagnostics coclosure_diagnostics(const RiemannTensor& R, double tol) {
  if (R.n() != 3) throw std::invalid_argument("coclosure_diagnostics: needs n = 3");
  const ScalarMode mode = R.mode();
  const Scalar one = Scalar::one(mode), zero = Scalar::zero(mode);
  GriffithsSystem sys(FrameContext(3, one));
  // *(theta ^ d theta) = (d theta)^2 / 2 is closed, so phi is coclosed iff alpha_2 - alpha_0 is.
  const ExteriorForm contact_dual =
      hodge(wedge(sys.theta(), sys.d_theta())) - power(sys.d_theta(), 2) * (one / Scalar::integer(2, mode));
  CoclosureDiagnostics out;
  out.a0_minus_a2 = coclosed_on_fibers(R, one, {one, zero, -one, zero}, tol);
  out.a1_minus_a3 = coclosed_on_fibers(R, one, {zero, one, zero, -one}, tol);
  out.phi = sys.is_negligible(contact_dual, tol) && coclosed_on_fibers(R, one, {-one, zero, one, zero}, tol);
  return out;
}

ComplexForm complex_wedge(const ComplexForm& a, const ComplexForm& b) {
  return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}

ComplexForm special_lagrangian_form() {
  auto factor = [](int real_leg, int imaginary_leg) {
    return ComplexForm{ExteriorForm::covector(7, real_leg), ExteriorForm::covector(7, imaginary_leg)};
  };
  return complex_wedge(complex_wedge(factor(4, 1), factor(5, 2)), factor(6, 3));
}

bool special_lagrangian_identity(const std::vector<ExteriorForm>& alphas) {
  if (alphas.size() != 4) throw std::invalid_argument("special_lagrangian_identity: need alpha_0..alpha_3");
  ComplexForm omega = special_lagrangian_form();
  return omega.re == alphas[0] - alphas[2] && omega.im == alphas[1] - alphas[3];
}

bool special_lagrangian_identity() {
  std::vector<ExteriorForm> alphas;
  for (int i = 0; i <= 3; ++i) alphas.push_back(alpha_fast(3, i));
  return special_lagrangian_identity(alphas);
}

Report never_closed_check(const std::vector<RiemannTensor>& samples) {
  std::size_t even_closed = 0, odd_closed = 0;
  Scalar smallest_even, smallest_odd;
  bool first = true;
  for (const auto& R : samples) {
    if (R.n() != 3) throw std::invalid_argument("never_closed_check: needs n = 3 tensors");
    GriffithsSystem sys(FrameContext(3, Scalar::one(R.mode())));
    ExteriorForm even = sys.d_alpha(R, 0) - sys.d_alpha(R, 2);
    ExteriorForm odd = sys.d_alpha(R, 1) - sys.d_alpha(R, 3);
    if (sys.is_negligible(even)) ++even_closed;
    if (sys.is_negligible(odd)) ++odd_closed;
    Scalar e = even.max_abs().to_mode(ScalarMode::floating), o = odd.max_abs().to_mode(ScalarMode::floating);
    if (first || e < smallest_even) smallest_even = e;
    if (first || o < smallest_odd) smallest_odd = o;
    first = false;
  }
  Report report;
  report.add("alpha0_minus_alpha2_never_closed", even_closed == 0,
             first ? "0" : "min |d| = " + smallest_even.str() + ", closed samples = " + std::to_string(even_closed));
  report.add("alpha1_minus_alpha3_never_closed", odd_closed == 0,
             first ? "0" : "min |d| = " + smallest_odd.str() + ", closed samples = " + std::to_string(odd_closed));
  return report;
}

namespace {

struct Term {
  std::vector<int> rows;
  double coef;
};

double small_det(std::vector<double>& a, int p) {
  double det = 1.0;
  for (int col = 0; col < p; ++col) {
    int pivot = col;
    for (int r = col + 1; r < p; ++r)
      if (std::abs(a[r * p + col]) > std::abs(a[pivot * p + col])) pivot = r;
    if (a[pivot * p + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < p; ++c) std::swap(a[pivot * p + c], a[col * p + c]);
      det = -det;
    }
    det *= a[col * p + col];
    for (int r = col + 1; r < p; ++r) {
      double f = a[r * p + col] / a[col * p + col];
      for (int c = col; c < p; ++c) a[r * p + c] -= f * a[col * p + c];
    }
  }
  return det;
}

class MultilinearForm {
 public:
  MultilinearForm(const ExteriorForm& form) : dim_(form.dim()), p_(form.degree()) {
    for (const auto& [index, coef] : form.terms()) terms_.push_back({index.indices(), coef.to_double()});
  }

  int dim() const { return dim_; }
  int degree() const { return p_; }

  // Value at the columns of V and its Euclidean gradient.
  double value(const Eigen::MatrixXd& V, Eigen::MatrixXd* grad) const {
    const int p = p_;
    std::vector<double> block(static_cast<std::size_t>(p * p)), scratch;
    if (grad) grad->setZero(dim_, p);
    double total = 0.0;
    for (const auto& t : terms_) {
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) block[r * p + c] = V(t.rows[r], c);
      scratch = block;
      total += t.coef * small_det(scratch, p);
      if (!grad) continue;
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) {
          std::vector<double> minor;
          minor.reserve(static_cast<std::size_t>((p - 1) * (p - 1)));
          for (int rr = 0; rr < p; ++rr)
            for (int cc = 0; cc < p; ++cc)
              if (rr != r && cc != c) minor.push_back(block[rr * p + cc]);
          double cof = p == 1 ? 1.0 : small_det(minor, p - 1);
          if ((r + c) % 2 != 0) cof = -cof;
          (*grad)(t.rows[r], c) += t.coef * cof;
        }
    }
    return total;
  }

 private:
  int dim_, p_;
  std::vector<Term> terms_;
};

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& V) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(V);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(V.rows(), V.cols());
  const Eigen::MatrixXd& R = qr.matrixQR();
  for (int c = 0; c < V.cols(); ++c)
    if (R(c, c) < 0) Q.col(c) *= -1.0;
  return Q;
}

struct AscentResult {
  double value;
  bool converged;
};

AscentResult ascend(const MultilinearForm& f, std::uint64_t seed, std::uint64_t sample, int n_ascent) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
  std::mt19937_64 gen(seq);
  auto uniform = [&gen] { return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53; };
  Eigen::MatrixXd V(f.dim(), f.degree());
  for (int r = 0; r < V.rows(); ++r)
    for (int c = 0; c < V.cols(); ++c) {
      const double u1 = uniform(), u2 = uniform();
      V(r, c) = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
    }
  V = orthonormalize(V);

  Eigen::MatrixXd G;
  double value = f.value(V, &G);
  double step = 0.1;
  bool converged = false;
  for (int it = 0; it < n_ascent; ++it) {
    Eigen::MatrixXd VtG = V.transpose() * G;
    Eigen::MatrixXd rgrad = G - V * (0.5 * (VtG + VtG.transpose()));
    if (rgrad.norm() < 1e-9) {
      converged = true;
      break;
    }
    Eigen::MatrixXd candidate = orthonormalize(V + step * rgrad);
    Eigen::MatrixXd candidate_grad;
    double candidate_value = f.value(candidate, &candidate_grad);
    if (candidate_value > value) {
      V = std::move(candidate);
      G = std::move(candidate_grad);
      value = candidate_value;
    } else {
      step *= 0.5;
      if (step < 1e-12) {
        converged = true;
        break;
      }
    }
  }
  return {value, converged};
}

}  // namespace

ComassEstimate comass_estimate(const ExteriorForm& form, int n_samples, int n_ascent, std::uint64_t seed,
                               unsigned threads) {
  if (form.mode() != ScalarMode::floating) throw ArithmeticModeError("comass_estimate: form must be floating");
  if (form.degree() < 1 || form.degree() > form.dim()) throw std::invalid_argument("comass_estimate: bad degree");
  if (n_samples < 1 || n_ascent < 0) throw std::invalid_argument("comass_estimate: bad sample counts");
  const MultilinearForm f(form);
  std::vector<AscentResult> results(static_cast<std::size_t>(n_samples));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n_samples));
  auto work = [&](unsigned worker) {
    for (int i = static_cast<int>(worker); i < n_samples; i += static_cast<int>(threads))
      results[static_cast<std::size_t>(i)] = ascend(f, seed, static_cast<std::uint64_t>(i), n_ascent);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  ComassEstimate out;
  out.samples = n_samples;
  out.lower_bound = results.front().value;
  out.converged = results.front().converged;
  for (const auto& r : results)
    if (r.value > out.lower_bound) {
      out.lower_bound = r.value;
      out.converged = r.converged;
    }
  return out;
}

}  // namespace griffiths
