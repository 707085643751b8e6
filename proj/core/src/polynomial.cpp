#include "griffiths/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace griffiths {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
  std::vector<Rational> coefficients(static_cast<std::size_t>(power) + 1, Rational(0));
  coefficients.back() = c;
  return Polynomial(std::move(coefficients));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Rational> out(std::max(coefficients_.size(), rhs.coefficients_.size()), Rational(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) out[k] += coefficients_[k];
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) out[k] += rhs.coefficients_[k];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + rhs * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(coefficients_.size() + rhs.coefficients_.size() - 1, Rational(0));
  for (std::size_t a = 0; a < coefficients_.size(); ++a)
    for (std::size_t b = 0; b < rhs.coefficients_.size(); ++b) out[a + b] += coefficients_[a] * rhs.coefficients_[b];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& k) const {
  std::vector<Rational> out = coefficients_;
  for (auto& c : out) c *= k;
  return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (k == 0 || c != 1) {
      os << c.get_str();
      if (k > 0) os << "*";
    }
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace griffiths
