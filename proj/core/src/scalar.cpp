#include "griffiths/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace griffiths {

Scalar::Scalar(Rational q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Scalar::rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::integer(long v, ScalarMode mode) {
  return mode == ScalarMode::exact ? Scalar(v) : Scalar::real(static_cast<double>(v));
}

Scalar Scalar::parse(const std::string& raw, ScalarMode mode) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text += c;
  if (text.empty()) throw std::invalid_argument("empty number");
  if (mode == ScalarMode::floating) {
    if (auto slash = text.find('/'); slash != std::string::npos)
      return real(std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1)));
    std::size_t used = 0;
    double x = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad number: " + raw);
    return real(x);
  }
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational num = parse(text.substr(0, slash)).exact();
    Rational den = parse(text.substr(slash + 1)).exact();
    if (den == 0) throw std::invalid_argument("zero denominator: " + raw);
    return Scalar(Rational(num / den));
  }
  // Decimal with optional exponent, converted exactly.
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (; pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'); ++pos) {
    if (text[pos] == '.') {
      if (seen_point) throw std::invalid_argument("bad number: " + raw);
      seen_point = true;
    } else {
      digits += text[pos];
      if (seen_point) --scale;
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad number: " + raw);
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw std::invalid_argument("bad number: " + raw);
    std::size_t used = 0;
    std::string exponent = text.substr(pos + 1);
    long e = std::stol(exponent, &used);
    if (used != exponent.size()) throw std::invalid_argument("bad number: " + raw);
    scale += e;
  }
  mpz_class mantissa(digits, 10);
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(mantissa, ten_power) : Rational(mantissa * ten_power);
  q.canonicalize();
  if (negative) q = -q;
  return Scalar(q);
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  return std::get<double>(value_) == 0.0;
}

int Scalar::sign() const {
  if (auto q = std::get_if<Rational>(&value_)) return sgn(*q);
  double x = std::get<double>(value_);
  return (x > 0) - (x < 0);
}

const Rational& Scalar::exact() const {
  if (auto q = std::get_if<Rational>(&value_)) return *q;
  throw ArithmeticModeError("exact value requested from a floating Scalar");
}

double Scalar::to_double() const {
  if (auto q = std::get_if<Rational>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Scalar Scalar::to_mode(ScalarMode target) const {
  if (target == mode()) return *this;
  if (target == ScalarMode::floating) return real(to_double());
  throw ArithmeticModeError("cannot convert a floating Scalar to exact");
}

Scalar Scalar::abs() const {
  if (auto q = std::get_if<Rational>(&value_)) return Scalar(Rational(::abs(*q)));
  return real(std::fabs(std::get<double>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto q = std::get_if<Rational>(&value_)) return Scalar(Rational(1 / *q));
  return real(1.0 / std::get<double>(value_));
}

void Scalar::require_same_mode(const Scalar& other, const char* op) const {
  if (value_.index() != other.value_.index())
    throw ArithmeticModeError(std::string("mixed exact/floating operands in ") + op);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_mode(rhs, "+");
  if (auto q = std::get_if<Rational>(&value_))
    *q += std::get<Rational>(rhs.value_);
  else
    std::get<double>(value_) += std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_mode(rhs, "-");
  if (auto q = std::get_if<Rational>(&value_))
    *q -= std::get<Rational>(rhs.value_);
  else
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_mode(rhs, "*");
  if (auto q = std::get_if<Rational>(&value_))
    *q *= std::get<Rational>(rhs.value_);
  else
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_mode(rhs, "/");
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (auto q = std::get_if<Rational>(&value_))
    *q /= std::get<Rational>(rhs.value_);
  else
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator*=(long k) {
  if (auto q = std::get_if<Rational>(&value_))
    *q *= k;
  else
    std::get<double>(value_) *= static_cast<double>(k);
  return *this;
}

Scalar Scalar::operator-() const {
  if (auto q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return real(-std::get<double>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_mode(b, "==");
  if (auto q = std::get_if<Rational>(&a.value_)) return *q == std::get<Rational>(b.value_);
  return std::get<double>(a.value_) == std::get<double>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_same_mode(b, "<");
  if (auto q = std::get_if<Rational>(&a.value_)) return *q < std::get<Rational>(b.value_);
  return std::get<double>(a.value_) < std::get<double>(b.value_);
}

std::string Scalar::str() const {
  if (auto q = std::get_if<Rational>(&value_)) return q->get_str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

Scalar pow(const Scalar& base, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Scalar result = Scalar::one(base.mode());
  for (int k = 0; k < e; ++k) result *= base;
  return result;
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn = sqrt(num), rd = sqrt(den);
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace griffiths
