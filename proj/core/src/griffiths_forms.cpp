#include "griffiths/griffiths_forms.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "griffiths/metrics.hpp"

namespace griffiths {

FrameContext::FrameContext(int n_, Scalar s_) : n(n_), s(std::move(s_)) {
  if (n < 1) throw std::invalid_argument("FrameContext: n must be at least 1");
  if (s.sign() <= 0) throw std::invalid_argument("FrameContext: s must be positive");
}

ScalarMatrix b_endomorphism(int n, ScalarMode mode) {
  const std::size_t dim = static_cast<std::size_t>(2 * n + 1);
  ScalarMatrix B(dim, dim, mode);
  for (int j = 1; j <= n; ++j) B(j + n, j) = Scalar::one(mode);
  return B;
}

namespace {

struct ContractionSearch {
  const ExteriorForm& eta;
  // columns[k][src] = nonzero (row, value) pairs of endos[k] e_src restricted to the support of eta.
  const std::vector<std::vector<std::vector<std::pair<int, Scalar>>>>& columns;
  std::vector<int> subset;
  Scalar total;

  void run(std::size_t slot, std::uint32_t used_pos, int perm_inv, std::uint64_t used_out, int out_inv,
           const Scalar& product) {
    if (slot == subset.size()) {
      auto it = eta.terms().find(MultiIndex::from_bits(used_out));
      if (it == eta.terms().end()) return;
      Scalar term = product * it->second;
      if ((perm_inv + out_inv) % 2 == 0)
        total += term;
      else
        total -= term;
      return;
    }
    for (std::size_t r = 0; r < subset.size(); ++r) {
      if ((used_pos >> r) & 1u) continue;
      int extra_perm = std::popcount(used_pos >> (r + 1));
      for (const auto& [row, value] : columns[slot][subset[r]]) {
        if ((used_out >> row) & 1u) continue;
        int extra_out = std::popcount(used_out >> (row + 1));
        run(slot + 1, used_pos | (1u << r), perm_inv + extra_perm, used_out | (std::uint64_t{1} << row),
            out_inv + extra_out, product * value);
      }
    }
  }
};

void for_each_subset(int dim, int p, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(current.size()) == p) {
      visit(current);
      return;
    }
    for (int j = start; j <= dim - (p - static_cast<int>(current.size())); ++j) {
      current.push_back(j);
      rec(j + 1);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace

ExteriorForm b_contraction(const ExteriorForm& eta, const std::vector<ScalarMatrix>& endos) {
  const int p = eta.degree();
  const int dim = eta.dim();
  if (static_cast<int>(endos.size()) != p)
    throw std::invalid_argument("b_contraction: need exactly one endomorphism per form degree");
  for (const auto& E : endos) {
    if (E.rows() != static_cast<std::size_t>(dim) || E.cols() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("b_contraction: endomorphism has the wrong size");
    if (E.mode() != eta.mode()) throw ArithmeticModeError("b_contraction: mode mismatch");
  }
  ExteriorForm out(dim, p, eta.mode());
  if (p == 0) return eta;

  std::uint64_t support = 0;
  for (const auto& [index, coef] : eta.terms()) support |= index.bits();
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> columns(p);
  for (int k = 0; k < p; ++k) {
    columns[k].resize(dim);
    for (int src = 0; src < dim; ++src)
      for (int row = 0; row < dim; ++row)
        if (((support >> row) & 1u) && !endos[k](row, src).is_zero())
          columns[k][src].emplace_back(row, endos[k](row, src));
  }
  for_each_subset(dim, p, [&](const std::vector<int>& subset) {
    ContractionSearch search{eta, columns, subset, Scalar::zero(eta.mode())};
    search.run(0, 0, 0, 0, 0, Scalar::one(eta.mode()));
    out.accumulate(MultiIndex(subset), search.total);
  });
  return out;
}

Scalar griffiths_coefficient(int n, int i, ScalarMode mode) {
  if (i < 0 || i > n) throw std::invalid_argument("griffiths_coefficient: i out of range");
  Rational denom = 1;
  for (int k = 2; k <= i; ++k) denom *= k;
  for (int k = 2; k <= n - i; ++k) denom *= k;
  return Scalar(Rational(1 / denom)).to_mode(mode);
}

ExteriorForm alpha_bruteforce(int n, int i, ScalarMode mode) {
  const int dim = 2 * n + 1;
  if (i < 0 || i > n) return ExteriorForm(dim, n, mode);
  std::vector<int> vertical;
  for (int j = 1; j <= n; ++j) vertical.push_back(j + n);
  ExteriorForm alpha0 = ExteriorForm::basis(dim, vertical, Scalar::one(mode));
  std::vector<ScalarMatrix> endos(static_cast<std::size_t>(i), b_endomorphism(n, mode));
  endos.resize(static_cast<std::size_t>(n), ScalarMatrix::identity(static_cast<std::size_t>(dim), mode));
  return b_contraction(alpha0, endos) * griffiths_coefficient(n, i, mode);
}

ExteriorForm alpha_fast(int n, int i, ScalarMode mode) {
  const int dim = 2 * n + 1;
  ExteriorForm out(dim, n, mode);
  if (i < 0 || i > n) return out;
  for_each_subset(n, i, [&](const std::vector<int>& chosen) {
    std::uint32_t horizontal = 0;
    for (int j : chosen) horizontal |= 1u << j;
    std::vector<int> legs;
    for (int j = 0; j < n; ++j) legs.push_back(((horizontal >> j) & 1u) ? j + 1 : j + 1 + n);
    out += ExteriorForm::basis(dim, legs, Scalar::one(mode));
  });
  return out;
}

GriffithsSystem::GriffithsSystem(FrameContext ctx) : ctx_(std::move(ctx)) {
  const int n = ctx_.n, dim = ctx_.dim();
  const ScalarMode mode = ctx_.mode();
  theta_ = ExteriorForm::covector(dim, 0, ctx_.s);
  d_theta_ = ExteriorForm(dim, 2, mode);
  for (int j = 1; j <= n; ++j) d_theta_ += ExteriorForm::basis(dim, {j + n, j}, Scalar::one(mode));
  std::vector<int> horizontal;
  for (int j = 0; j <= n; ++j) horizontal.push_back(j);
  vol_ = ExteriorForm::basis(dim, horizontal, Scalar::one(mode));
  for (int i = 0; i <= n; ++i) alphas_.push_back(alpha_fast(n, i, mode));
}

ExteriorForm GriffithsSystem::alpha(int i) const {
  if (i < 0 || i > n()) return ExteriorForm(dim(), n(), mode());
  return alphas_[static_cast<std::size_t>(i)];
}

void GriffithsSystem::require_tensor(const RiemannTensor& R) const {
  if (R.n() != n()) throw std::invalid_argument("curvature tensor dimension does not match n + 1");
  if (R.mode() != mode()) throw ArithmeticModeError("curvature tensor mode differs from the frame context");
}

ExteriorForm GriffithsSystem::r_alpha(const RiemannTensor& R, int i) const {
  require_tensor(R);
  const int n = this->n(), d = dim();
  ExteriorForm out(d, n + 1, mode());
  if (i < 0 || i > n) return out;
  std::vector<ExteriorForm> contracted;
  for (int p = 1; p <= n; ++p) contracted.push_back(interior(p + n, alphas_[static_cast<std::size_t>(i)]));
  for (int j = 0; j <= n; ++j)
    for (int q = j + 1; q <= n; ++q) {
      ExteriorForm inner(d, n - 1, mode());
      for (int p = 1; p <= n; ++p) {
        const Scalar& c = R(j, q, 0, p);
        if (!c.is_zero()) inner += contracted[static_cast<std::size_t>(p - 1)] * c;
      }
      if (!inner.is_zero()) out += wedge(ExteriorForm::basis(d, {j, q}, s()), inner);
    }
  return out;
}

ExteriorForm GriffithsSystem::d_alpha(const RiemannTensor& R, int i) const {
  ExteriorForm out = r_alpha(R, i);
  if (i < 0 || i > n()) return out;
  Scalar factor = Scalar::integer(n() - i + 1, mode()) / (s() * s());
  out += wedge(theta_, alpha(i - 1)) * factor;
  return out;
}

ExteriorForm GriffithsSystem::d_star_alpha(const RiemannTensor& R, int i) const {
  require_tensor(R);
  ExteriorForm out(dim(), n() + 2, mode());
  if (i < 0 || i > n()) return out;
  out = wedge(d_theta_, alpha(n() - i)) - wedge(theta_, d_alpha(R, n() - i));
  Scalar factor = s().inverse();
  if (i % 2 != 0) factor = -factor;
  return out * factor;
}

ExteriorForm GriffithsSystem::d_star_combination(const RiemannTensor& R, const ScalarVector& coefficients) const {
  if (static_cast<int>(coefficients.size()) != n() + 1)
    throw std::invalid_argument("d_star_combination: need n + 1 coefficients");
  ExteriorForm out(dim(), n() + 2, mode());
  for (int i = 0; i <= n(); ++i) {
    const Scalar& c = coefficients[static_cast<std::size_t>(i)];
    if (!c.is_zero()) out += d_star_alpha(R, i) * c.to_mode(mode());
  }
  return out;
}

bool GriffithsSystem::is_negligible(const ExteriorForm& f, double tol) const {
  return residual_negligible(f.max_abs(), tol);
}

namespace {

Scalar factorial(int k, ScalarMode mode) {
  Scalar out = Scalar::one(mode);
  for (int j = 2; j <= k; ++j) out *= j;
  return out;
}

std::string indexed(const std::string& name, int i) { return name + "[" + std::to_string(i) + "]"; }

}  // namespace

Report structure_report(const RiemannTensor& R, const Scalar& s, double tol) {
  GriffithsSystem sys(FrameContext(R.n(), s));
  const int n = sys.n();
  const ScalarMode mode = sys.mode();
  const Scalar one = Scalar::one(mode);
  const Scalar orientation = (n * (n + 1) / 2) % 2 == 0 ? one : -one;
  const ExteriorForm& theta = sys.theta();
  const ExteriorForm& dtheta = sys.d_theta();
  Report report;

  report.add_form("hodge_theta", hodge(theta) - wedge(sys.alpha(n), sys.alpha(0)) * s, tol);
  report.add_form("hodge_theta_dtheta_power",
                  hodge(theta) - power(dtheta, n) * (s * orientation / factorial(n, mode)), tol);
  for (int i = 0; i <= n; ++i) {
    Scalar factor = orientation * factorial(i, mode) / (factorial(n - i, mode) * s);
    report.add_form(indexed("hodge_dtheta_power", i),
                    hodge(power(dtheta, i)) - wedge(theta, power(dtheta, n - i)) * factor, tol);
  }
  for (int i = 0; i <= n; ++i) {
    Scalar factor = (i % 2 == 0 ? one : -one) / s;
    report.add_form(indexed("hodge_alpha", i), hodge(sys.alpha(i)) - wedge(theta, sys.alpha(n - i)) * factor, tol);
  }
  for (int i = 0; i <= n; ++i) report.add_form(indexed("alpha_wedge_dtheta", i), wedge(sys.alpha(i), dtheta), tol);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (j != n - i)
        report.add_form("alpha_wedge_alpha[" + std::to_string(i) + "," + std::to_string(j) + "]",
                        wedge(sys.alpha(i), sys.alpha(j)), tol);

  std::vector<ExteriorForm> probes{ExteriorForm::constant(sys.dim(), one), theta, dtheta, sys.vol()};
  for (int i = 0; i <= n; ++i) probes.push_back(sys.alpha(i));
  Scalar worst = Scalar::zero(mode);
  for (const auto& f : probes) {
    Scalar r = (hodge(hodge(f)) - f).max_abs();
    if (worst < r) worst = r;
  }
  report.add_residual("double_hodge", worst, tol);
  report.add_form("contact_volume",
                  wedge(theta, power(dtheta, n)) - wedge(sys.vol(), sys.alpha(0)) * (orientation * factorial(n, mode) * s),
                  tol);

  RicciData ric = ricci(R, s);
  report.add_residual("r_matches_ricci", ric.r - s * s * ric.ric(0, 0), tol);
  report.add_form("r_alpha_n", sys.r_alpha(R, n), tol);
  report.add_form("r_alpha_n_minus_1", sys.r_alpha(R, n - 1) + sys.vol() * (ric.r / s), tol);
  for (int i = 0; i <= n; ++i) {
    report.add_form(indexed("dtheta_wedge_r_alpha", i), wedge(dtheta, sys.r_alpha(R, i)), tol);
    report.add_form(indexed("dtheta_wedge_d_alpha", i), wedge(dtheta, sys.d_alpha(R, i)), tol);
  }
  report.add_form("d_star_alpha_0", sys.d_star_alpha(R, 0), tol);
  report.add_form("d_star_alpha_1", sys.d_star_alpha(R, 1), tol);
  if (n >= 2) report.add_form("d_star_alpha_2_rho", sys.d_star_alpha(R, 2) - wedge(rho(R, s), sys.vol()), tol);
  return report;
}

ExteriorForm euler_lagrange_form(int n, const ScalarVector& b, const Scalar& k, const Scalar& s) {
  if (static_cast<int>(b.size()) != n + 1) throw std::invalid_argument("euler_lagrange_form: need n + 1 coefficients");
  const ScalarMode mode = s.mode();
  const int dim = 2 * n + 1;
  const Scalar kk = k.to_mode(mode);
  ExteriorForm psi(dim, n, mode);
  for (int i = 0; i <= n; ++i) {
    const Scalar bi = b[static_cast<std::size_t>(i)].to_mode(mode);
    if (bi.is_zero()) continue;
    psi += alpha_fast(n, i - 1, mode) * (bi * Scalar::integer(n + 1 - i, mode) / (s * s));
    psi -= alpha_fast(n, i + 1, mode) * (bi * kk * Scalar::integer(i + 1, mode));
  }
  return psi;
}

bool coclosed_on_fibers(const RiemannTensor& R, const Scalar& s, const ScalarVector& coefficients, double tol) {
  GriffithsSystem sys(FrameContext(R.n(), s.to_mode(R.mode())));
  for (const auto& u : fiber_probes(R.dim(), R.mode())) {
    RiemannTensor adapted = rotate_riemann(R, adapt_frame(u));
    if (!sys.is_negligible(sys.d_star_combination(adapted, coefficients), tol)) return false;
  }
  return true;
}

bool alpha_coclosed_on_fibers(const RiemannTensor& R, const Scalar& s, int i, double tol) {
  ScalarVector coefficients(static_cast<std::size_t>(R.n() + 1), Scalar::zero(R.mode()));
  if (i < 0 || i > R.n()) return true;
  coefficients[static_cast<std::size_t>(i)] = Scalar::one(R.mode());
  return coclosed_on_fibers(R, s, coefficients, tol);
}

}  // namespace griffiths
