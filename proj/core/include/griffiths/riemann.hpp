#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "griffiths/exterior.hpp"
#include "griffiths/linalg.hpp"
#include "griffiths/scalar.hpp"

namespace griffiths {

/// Algebraic curvature tensor R_{abcd} = <R(e_a, e_b) e_c, e_d> on an
/// (n+1)-dimensional orthonormal frame e_0..e_n. Stored densely.
class RiemannTensor {
 public:
  RiemannTensor() = default;
  explicit RiemannTensor(int n, ScalarMode mode = ScalarMode::exact);

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  ScalarMode mode() const { return mode_; }

  const Scalar& operator()(int a, int b, int c, int d) const { return data_[offset(a, b, c, d)]; }
  /// Raw access to one slot; no symmetry is imposed.
  Scalar& at(int a, int b, int c, int d) { return data_[offset(a, b, c, d)]; }

  /// Sets R_{abcd} = v together with its images under pair antisymmetry and pair exchange.
  void set(int a, int b, int c, int d, const Scalar& v);

  RiemannTensor operator+(const RiemannTensor& rhs) const;
  RiemannTensor operator-(const RiemannTensor& rhs) const;
  RiemannTensor scaled(const Scalar& factor) const;
  bool operator==(const RiemannTensor& rhs) const;

  Scalar max_abs() const;
  Scalar max_abs_difference(const RiemannTensor& rhs) const;
  RiemannTensor to_mode(ScalarMode mode) const;

 private:
  std::size_t offset(int a, int b, int c, int d) const {
    const auto m = static_cast<std::size_t>(n_ + 1);
    return ((static_cast<std::size_t>(a) * m + b) * m + c) * m + d;
  }

  int n_ = 0;
  ScalarMode mode_ = ScalarMode::exact;
  std::vector<Scalar> data_;
};

/// Names of the violated symmetry families: "antisymmetry_first_pair",
/// "antisymmetry_second_pair", "pair_exchange", "first_bianchi".
std::vector<std::string> validate_riemann(const RiemannTensor& R, double tol = 1e-12);

struct RicciData {
  ScalarMatrix ric;  // ric_{bc} = sum_a R_{abca}
  Scalar scal;
  Scalar r;          // Ric(xi, xi) = s^2 ric_{00}
};

RicciData ricci(const RiemannTensor& R, const Scalar& s);

/// rho = sum_{a,b>=1} s R_{ab0a} e^{b+n}, a 1-form on the (2n+1)-coframe.
ExteriorForm rho(const RiemannTensor& R, const Scalar& s);

/// Max-norm of ric - (scal/(n+1)) id.
Scalar einstein_residual(const RiemannTensor& R);

/// Exact random algebraic curvature tensor with small integer seeds.
RiemannTensor random_riemann(std::uint64_t seed, int n);

/// Pair antisymmetrization, pair exchange, then one first-Bianchi projection.
RiemannTensor symmetrize_riemann(const RiemannTensor& T);

/// T - b(T) with b the cyclic average over the first three slots.
RiemannTensor bianchi_project(const RiemannTensor& T);

/// (h o g)_{abcd} = h_ad g_bc + h_bc g_ad - h_ac g_bd - h_bd g_ac for g = identity.
RiemannTensor kulkarni_nomizu_identity(const ScalarMatrix& h);

/// Removes the traceless Ricci part; the result is Einstein. Needs n+1 >= 3.
RiemannTensor einstein_project(const RiemannTensor& R);

/// Adds delta on the symmetry orbit of (a,b,c,d), then restores the first Bianchi identity.
RiemannTensor perturb_component(const RiemannTensor& R, int a, int b, int c, int d, const Scalar& delta);

/// {"n": n, "components": [[a,b,c,d,num,den], ...]} over canonical slots.
std::string riemann_to_json(const RiemannTensor& R);
RiemannTensor riemann_from_json(const std::string& text);

}  // namespace griffiths
