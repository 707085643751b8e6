#pragma once

#include <string>
#include <vector>

#include "griffiths/scalar.hpp"

namespace griffiths {

/// Univariate polynomial with exact rational coefficients; coefficient k
/// multiplies x^k. Trailing zeros are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& k) const;
  bool operator==(const Polynomial& rhs) const { return coefficients_ == rhs.coefficients_; }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// e.g. "c^3 + 4*c" in the variable `var`.
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

}  // namespace griffiths
