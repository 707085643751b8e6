#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "griffiths/linalg.hpp"
#include "griffiths/scalar.hpp"

namespace griffiths {

/// Strictly increasing set of coframe indices, stored as a bit set.
/// Supports coframes of dimension up to 64.
class MultiIndex {
 public:
  static constexpr int max_dim = 64;

  MultiIndex() = default;
  /// Indices must be strictly increasing and lie in [0, 64).
  MultiIndex(std::initializer_list<int> indices);
  explicit MultiIndex(const std::vector<int>& indices);
  static MultiIndex from_bits(std::uint64_t bits) {
    MultiIndex m;
    m.bits_ = bits;
    return m;
  }

  std::uint64_t bits() const { return bits_; }
  int degree() const;
  bool contains(int j) const { return (bits_ >> j) & 1u; }
  std::vector<int> indices() const;
  /// Zero-based position of `j` inside the index list (j must be present).
  int position(int j) const;

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.bits_ == b.bits_; }
  friend bool operator!=(MultiIndex a, MultiIndex b) { return a.bits_ != b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on equal-length index lists.
struct LexicographicLess {
  bool operator()(MultiIndex a, MultiIndex b) const;
};

/// +1 or -1: parity of sorting the concatenation (a, b); 0 when they overlap.
int concatenation_sign(MultiIndex a, MultiIndex b);

/// Homogeneous p-form with constant coefficients on an orthonormal coframe
/// e^0, ..., e^{dim-1}. Zero coefficients are never stored.
class ExteriorForm {
 public:
  using Terms = std::map<MultiIndex, Scalar, LexicographicLess>;

  ExteriorForm() = default;
  ExteriorForm(int dim, int degree, ScalarMode mode = ScalarMode::exact);

  static ExteriorForm constant(int dim, const Scalar& value);
  /// coef * e^{i_1} ^ ... ^ e^{i_p}; indices in any order, repeated index gives zero.
  static ExteriorForm basis(int dim, const std::vector<int>& indices, const Scalar& coef = Scalar(1));
  static ExteriorForm covector(int dim, int j, const Scalar& coef = Scalar(1)) { return basis(dim, {j}, coef); }
  /// Sum of coefficients[j] * e^j.
  static ExteriorForm one_form(const ScalarVector& coefficients);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  ScalarMode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Signed coefficient of e^{indices} (indices in any order).
  Scalar coefficient(const std::vector<int>& indices) const;

  /// Adds coef to the coefficient of the canonical basis element `index`.
  void accumulate(MultiIndex index, const Scalar& coef);

  ExteriorForm& operator+=(const ExteriorForm& rhs);
  ExteriorForm& operator-=(const ExteriorForm& rhs);
  ExteriorForm& operator*=(const Scalar& factor);
  ExteriorForm operator-() const;

  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator*(ExteriorForm a, const Scalar& k) { return a *= k; }
  friend ExteriorForm operator*(const Scalar& k, ExteriorForm a) { return a *= k; }
  friend ExteriorForm operator/(ExteriorForm a, const Scalar& k) { return a *= k.inverse(); }

  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b);
  friend bool operator!=(const ExteriorForm& a, const ExteriorForm& b) { return !(a == b); }

  /// Max-norm of the coefficient vector.
  Scalar max_abs() const;
  /// Squared l2-norm of the coefficient vector.
  Scalar norm_squared() const;

  ExteriorForm to_mode(ScalarMode mode) const;

  /// Value on the vectors (given in frame components), by multilinear expansion.
  Scalar evaluate(const std::vector<ScalarVector>& vectors) const;

  /// e.g. "e^{0,1,4} - 2*e^{2,3}"; "0" for the zero form.
  std::string str() const;

 private:
  void require_compatible(const ExteriorForm& rhs, const char* op) const;

  int dim_ = 0;
  int degree_ = 0;
  ScalarMode mode_ = ScalarMode::exact;
  Terms terms_;
};

/// a ^ b. Degrees above dim give the zero form.
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

/// e_j interior product; degree-0 input gives the zero 0-form.
ExteriorForm interior(int j, const ExteriorForm& a);

/// Interior product with an arbitrary vector given in frame components.
ExteriorForm interior(const ScalarVector& v, const ExteriorForm& a);

/// Hodge star of the orthonormal coframe with orientation e^{0 1 ... dim-1}.
ExteriorForm hodge(const ExteriorForm& a);

/// i-fold wedge power of an even-degree form; power(a, 0) = 1.
ExteriorForm power(const ExteriorForm& a, int i);

}  // namespace griffiths
