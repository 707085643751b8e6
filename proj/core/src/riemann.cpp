#include "griffiths/riemann.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace griffiths {

RiemannTensor::RiemannTensor(int n, ScalarMode mode) : n_(n), mode_(mode) {
  if (n < 1) throw std::invalid_argument("RiemannTensor: n must be at least 1");
  const auto m = static_cast<std::size_t>(n + 1);
  data_.assign(m * m * m * m, Scalar::zero(mode));
}

void RiemannTensor::set(int a, int b, int c, int d, const Scalar& v) {
  if (v.mode() != mode_) throw ArithmeticModeError("RiemannTensor::set: mode mismatch");
  for (int x : {a, b, c, d})
    if (x < 0 || x > n_) throw std::invalid_argument("RiemannTensor::set: index out of range");
  if (a == b || c == d) {
    if (!v.is_zero()) throw std::invalid_argument("RiemannTensor::set: diagonal pair must vanish");
    return;
  }
  const Scalar neg = -v;
  at(a, b, c, d) = v;
  at(b, a, c, d) = neg;
  at(a, b, d, c) = neg;
  at(b, a, d, c) = v;
  at(c, d, a, b) = v;
  at(d, c, a, b) = neg;
  at(c, d, b, a) = neg;
  at(d, c, b, a) = v;
}

RiemannTensor RiemannTensor::operator+(const RiemannTensor& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("RiemannTensor: dimension mismatch");
  RiemannTensor out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RiemannTensor RiemannTensor::operator-(const RiemannTensor& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("RiemannTensor: dimension mismatch");
  RiemannTensor out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RiemannTensor RiemannTensor::scaled(const Scalar& factor) const {
  RiemannTensor out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

bool RiemannTensor::operator==(const RiemannTensor& rhs) const {
  return n_ == rhs.n_ && mode_ == rhs.mode_ && data_ == rhs.data_;
}

Scalar RiemannTensor::max_abs() const {
  Scalar worst = Scalar::zero(mode_);
  for (const auto& x : data_) {
    Scalar a = x.abs();
    if (worst < a) worst = a;
  }
  return worst;
}

Scalar RiemannTensor::max_abs_difference(const RiemannTensor& rhs) const { return (*this - rhs).max_abs(); }

RiemannTensor RiemannTensor::to_mode(ScalarMode mode) const {
  RiemannTensor out = *this;
  out.mode_ = mode;
  for (auto& x : out.data_) x = x.to_mode(mode);
  return out;
}

std::vector<std::string> validate_riemann(const RiemannTensor& R, double tol) {
  const int m = R.dim();
  const bool exact = R.mode() == ScalarMode::exact;
  auto nonzero = [&](const Scalar& x) { return exact ? !x.is_zero() : std::abs(x.to_double()) > tol; };
  bool first = false, second = false, exchange = false, bianchi = false;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          const Scalar& x = R(a, b, c, d);
          first = first || nonzero(x + R(b, a, c, d));
          second = second || nonzero(x + R(a, b, d, c));
          exchange = exchange || nonzero(x - R(c, d, a, b));
          bianchi = bianchi || nonzero(x + R(b, c, a, d) + R(c, a, b, d));
        }
  std::vector<std::string> out;
  if (first) out.emplace_back("antisymmetry_first_pair");
  if (second) out.emplace_back("antisymmetry_second_pair");
  if (exchange) out.emplace_back("pair_exchange");
  if (bianchi) out.emplace_back("first_bianchi");
  return out;
}

RicciData ricci(const RiemannTensor& R, const Scalar& s) {
  const int m = R.dim();
  const ScalarMode mode = R.mode();
  RicciData out{ScalarMatrix(m, m, mode), Scalar::zero(mode), Scalar::zero(mode)};
  for (int b = 0; b < m; ++b)
    for (int c = 0; c < m; ++c)
      for (int a = 0; a < m; ++a) out.ric(b, c) += R(a, b, c, a);
  for (int b = 0; b < m; ++b) out.scal += out.ric(b, b);
  Scalar sum = Scalar::zero(mode);
  for (int j = 1; j < m; ++j) sum += R(j, 0, 0, j);
  out.r = s * s * sum;
  return out;
}

ExteriorForm rho(const RiemannTensor& R, const Scalar& s) {
  const int n = R.n();
  ExteriorForm out(2 * n + 1, 1, R.mode());
  for (int b = 1; b <= n; ++b) {
    Scalar coef = Scalar::zero(R.mode());
    for (int a = 1; a <= n; ++a) coef += R(a, b, 0, a);
    out.accumulate(MultiIndex{b + n}, s * coef);
  }
  return out;
}

Scalar einstein_residual(const RiemannTensor& R) {
  RicciData data = ricci(R, Scalar::one(R.mode()));
  const int m = R.dim();
  Scalar mean = data.scal / Scalar::integer(m, R.mode());
  Scalar worst = Scalar::zero(R.mode());
  for (int b = 0; b < m; ++b)
    for (int c = 0; c < m; ++c) {
      Scalar x = data.ric(b, c);
      if (b == c) x -= mean;
      Scalar a = x.abs();
      if (worst < a) worst = a;
    }
  return worst;
}

RiemannTensor bianchi_project(const RiemannTensor& T) {
  const int m = T.dim();
  const Scalar third = T.mode() == ScalarMode::exact ? Scalar::rational(1, 3) : Scalar::real(1.0 / 3.0);
  RiemannTensor out(T.n(), T.mode());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          out.at(a, b, c, d) = T(a, b, c, d) - third * (T(a, b, c, d) + T(b, c, a, d) + T(c, a, b, d));
  return out;
}

RiemannTensor symmetrize_riemann(const RiemannTensor& T) {
  const int m = T.dim();
  const ScalarMode mode = T.mode();
  const Scalar quarter = mode == ScalarMode::exact ? Scalar::rational(1, 4) : Scalar::real(0.25);
  const Scalar half = mode == ScalarMode::exact ? Scalar::rational(1, 2) : Scalar::real(0.5);
  RiemannTensor anti(T.n(), mode);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          anti.at(a, b, c, d) = quarter * (T(a, b, c, d) - T(b, a, c, d) - T(a, b, d, c) + T(b, a, d, c));
  RiemannTensor paired(T.n(), mode);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) paired.at(a, b, c, d) = half * (anti(a, b, c, d) + anti(c, d, a, b));
  return bianchi_project(paired);
}

RiemannTensor random_riemann(std::uint64_t seed, int n) {
  std::mt19937_64 gen(seed);
  RiemannTensor raw(n);
  const int m = n + 1;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) raw.at(a, b, c, d) = Scalar(static_cast<long>(gen() % 11) - 5);
  return symmetrize_riemann(raw);
}

RiemannTensor kulkarni_nomizu_identity(const ScalarMatrix& h) {
  if (!h.is_square() || h.rows() < 2) throw std::invalid_argument("kulkarni_nomizu_identity: bad matrix");
  const int m = static_cast<int>(h.rows());
  RiemannTensor out(m - 1, h.mode());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          Scalar x = Scalar::zero(h.mode());
          if (b == c) x += h(a, d);
          if (a == d) x += h(b, c);
          if (b == d) x -= h(a, c);
          if (a == c) x -= h(b, d);
          out.at(a, b, c, d) = x;
        }
  return out;
}

RiemannTensor einstein_project(const RiemannTensor& R) {
  const int m = R.dim();
  if (m < 3) return R;
  const ScalarMode mode = R.mode();
  RicciData data = ricci(R, Scalar::one(mode));
  ScalarMatrix traceless = data.ric;
  Scalar mean = data.scal / Scalar::integer(m, mode);
  for (int b = 0; b < m; ++b) traceless(b, b) -= mean;
  return R - kulkarni_nomizu_identity(traceless).scaled(Scalar::one(mode) / Scalar::integer(m - 2, mode));
}

RiemannTensor perturb_component(const RiemannTensor& R, int a, int b, int c, int d, const Scalar& delta) {
  if (a == b || c == d) throw std::invalid_argument("perturb_component: slot is identically zero");
  RiemannTensor bump(R.n(), R.mode());
  bump.set(a, b, c, d, delta);
  return R + bianchi_project(bump);
}

namespace {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>(), 10);
  throw std::invalid_argument("riemann_from_json: expected an integer");
}

}  // namespace

std::string riemann_to_json(const RiemannTensor& R) {
  nlohmann::json components = nlohmann::json::array();
  const int m = R.dim();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = a; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          if (c == a && d < b) continue;
          const Scalar& x = R(a, b, c, d);
          if (x.is_zero()) continue;
          if (x.is_exact())
            components.push_back({a, b, c, d, integer_json(x.exact().get_num()), integer_json(x.exact().get_den())});
          else
            components.push_back({a, b, c, d, x.to_double(), 1});
        }
  nlohmann::json doc{{"n", R.n()}, {"components", components}};
  return doc.dump();
}

RiemannTensor riemann_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("riemann_from_json: ") + e.what());
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("components") ||
      !doc["components"].is_array())
    throw std::invalid_argument("riemann_from_json: need integer \"n\" and array \"components\"");
  bool floating = false;
  for (const auto& entry : doc["components"])
    if (entry.is_array() && entry.size() == 6 && entry[4].is_number_float()) floating = true;
  const ScalarMode mode = floating ? ScalarMode::floating : ScalarMode::exact;
  RiemannTensor R(doc["n"].get<int>(), mode);
  for (const auto& entry : doc["components"]) {
    if (!entry.is_array() || entry.size() != 6)
      throw std::invalid_argument("riemann_from_json: component must be [a,b,c,d,num,den]");
    int idx[4];
    for (int k = 0; k < 4; ++k) {
      if (!entry[k].is_number_integer()) throw std::invalid_argument("riemann_from_json: index must be an integer");
      idx[k] = entry[k].get<int>();
    }
    Scalar value;
    if (floating) {
      double den = entry[5].get<double>();
      if (den == 0.0) throw std::invalid_argument("riemann_from_json: zero denominator");
      value = Scalar::real(entry[4].get<double>() / den);
    } else {
      mpz_class num = integer_from_json(entry[4]), den = integer_from_json(entry[5]);
      if (den == 0) throw std::invalid_argument("riemann_from_json: zero denominator");
      value = Scalar(Rational(num, den));
    }
    R.set(idx[0], idx[1], idx[2], idx[3], value);
  }
  return R;
}

}  // namespace griffiths
