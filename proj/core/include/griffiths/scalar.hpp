#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>

namespace griffiths {

using Rational = mpq_class;

/// Raised when exact and floating-point values meet in one operation.
class ArithmeticModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ScalarMode { exact, floating };

/// A coefficient that is either an exact rational or an IEEE double.
///
/// The two realizations never mix: any binary operation between an exact and
/// a floating value throws ArithmeticModeError. Plain integers are neutral and
/// adopt the mode of the Scalar they are combined with.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}    // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational q);                       // NOLINT(google-explicit-constructor)

  static Scalar rational(long num, long den);
  static Scalar real(double x) { return Scalar(x, FloatTag{}); }
  static Scalar integer(long v, ScalarMode mode);
  static Scalar zero(ScalarMode mode) { return integer(0, mode); }
  static Scalar one(ScalarMode mode) { return integer(1, mode); }

  /// Parses "p/q", "-3", "0.25" or "1e-3". Exact unless `mode` is floating.
  static Scalar parse(const std::string& text, ScalarMode mode = ScalarMode::exact);

  ScalarMode mode() const { return std::holds_alternative<Rational>(value_) ? ScalarMode::exact : ScalarMode::floating; }
  bool is_exact() const { return mode() == ScalarMode::exact; }
  bool is_zero() const;
  int sign() const;

  const Rational& exact() const;
  double to_double() const;
  Scalar to_mode(ScalarMode mode) const;

  Scalar abs() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar& operator*=(long k);

  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, long k) { return a *= k; }
  friend Scalar operator*(long k, Scalar a) { return a *= k; }
  friend Scalar operator*(Scalar a, int k) { return a *= static_cast<long>(k); }
  friend Scalar operator*(int k, Scalar a) { return a *= static_cast<long>(k); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  /// "p/q" for exact values, shortest round-trip decimal for doubles.
  std::string str() const;

 private:
  struct FloatTag {};
  Scalar(double x, FloatTag) : value_(x) {}
  void require_same_mode(const Scalar& other, const char* op) const;

  std::variant<Rational, double> value_;
};

/// `base` to the power `e` (e >= 0) in the mode of `base`.
Scalar pow(const Scalar& base, int e);

/// Exact square root of a non-negative rational, if it is a rational square.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace griffiths
