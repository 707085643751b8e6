#include "griffiths/exterior.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace griffiths {

namespace {

std::uint64_t bits_at_or_below(int j) { return j >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (j + 1)) - 1; }

std::uint64_t bits_from_sorted(const std::vector<int>& indices) {
  std::uint64_t bits = 0;
  int previous = -1;
  for (int j : indices) {
    if (j <= previous || j >= MultiIndex::max_dim)
      throw std::invalid_argument("MultiIndex: indices must be strictly increasing and below 64");
    bits |= std::uint64_t{1} << j;
    previous = j;
  }
  return bits;
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> indices) : bits_(bits_from_sorted(std::vector<int>(indices))) {}

MultiIndex::MultiIndex(const std::vector<int>& indices) : bits_(bits_from_sorted(indices)) {}

int MultiIndex::degree() const { return std::popcount(bits_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

int MultiIndex::position(int j) const { return std::popcount(bits_ & ((std::uint64_t{1} << j) - 1)); }

bool LexicographicLess::operator()(MultiIndex a, MultiIndex b) const {
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return a.contains(std::countr_zero(diff));
}

int concatenation_sign(MultiIndex a, MultiIndex b) {
  if (a.bits() & b.bits()) return 0;
  int inversions = 0;
  for (std::uint64_t rest = b.bits(); rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += std::popcount(a.bits() & ~bits_at_or_below(j));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExteriorForm::ExteriorForm(int dim, int degree, ScalarMode mode) : dim_(dim), degree_(degree), mode_(mode) {
  if (dim < 0 || dim > MultiIndex::max_dim) throw std::invalid_argument("ExteriorForm: dimension out of range");
  if (degree < 0) throw std::invalid_argument("ExteriorForm: negative degree");
}

ExteriorForm ExteriorForm::constant(int dim, const Scalar& value) {
  ExteriorForm f(dim, 0, value.mode());
  f.accumulate(MultiIndex{}, value);
  return f;
}

ExteriorForm ExteriorForm::basis(int dim, const std::vector<int>& indices, const Scalar& coef) {
  ExteriorForm f(dim, static_cast<int>(indices.size()), coef.mode());
  std::uint64_t bits = 0;
  int inversions = 0;
  for (int j : indices) {
    if (j < 0 || j >= dim) throw std::invalid_argument("ExteriorForm::basis: index out of range");
    if ((bits >> j) & 1u) return f;
    inversions += std::popcount(bits & ~bits_at_or_below(j));
    bits |= std::uint64_t{1} << j;
  }
  f.accumulate(MultiIndex::from_bits(bits), inversions % 2 == 0 ? coef : -coef);
  return f;
}

ExteriorForm ExteriorForm::one_form(const ScalarVector& coefficients) {
  const ScalarMode mode = coefficients.empty() ? ScalarMode::exact : coefficients.front().mode();
  ExteriorForm f(static_cast<int>(coefficients.size()), 1, mode);
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    f.accumulate(MultiIndex::from_bits(std::uint64_t{1} << j), coefficients[j]);
  return f;
}

Scalar ExteriorForm::coefficient(const std::vector<int>& indices) const {
  ExteriorForm probe = basis(dim_, indices, Scalar::one(mode_));
  if (probe.is_zero() || static_cast<int>(indices.size()) != degree_) return Scalar::zero(mode_);
  const auto& [index, sign] = *probe.terms_.begin();
  auto it = terms_.find(index);
  if (it == terms_.end()) return Scalar::zero(mode_);
  return sign * it->second;
}

void ExteriorForm::accumulate(MultiIndex index, const Scalar& coef) {
  if (coef.mode() != mode_) throw ArithmeticModeError("ExteriorForm: coefficient mode differs from form mode");
  if (index.degree() != degree_) throw std::invalid_argument("ExteriorForm: term degree differs from form degree");
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ExteriorForm::require_compatible(const ExteriorForm& rhs, const char* op) const {
  if (mode_ != rhs.mode_) throw ArithmeticModeError(std::string("ExteriorForm: mixed modes in ") + op);
  if (dim_ != rhs.dim_) throw std::invalid_argument(std::string("ExteriorForm: dimension mismatch in ") + op);
  if (degree_ != rhs.degree_ && !rhs.is_zero() && !is_zero())
    throw std::invalid_argument(std::string("ExteriorForm: degree mismatch in ") + op);
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& rhs) {
  require_compatible(rhs, "+");
  if (is_zero()) degree_ = rhs.degree_;
  for (const auto& [index, coef] : rhs.terms_) accumulate(index, coef);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& rhs) {
  require_compatible(rhs, "-");
  if (is_zero()) degree_ = rhs.degree_;
  for (const auto& [index, coef] : rhs.terms_) accumulate(index, -coef);
  return *this;
}

ExteriorForm& ExteriorForm::operator*=(const Scalar& factor) {
  if (factor.mode() != mode_) throw ArithmeticModeError("ExteriorForm: mixed modes in scalar product");
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, coef] : terms_) coef *= factor;
  return *this;
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm out = *this;
  for (auto& [index, coef] : out.terms_) coef = -coef;
  return out;
}

bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.mode_ != b.mode_) throw ArithmeticModeError("ExteriorForm: comparing forms of different modes");
  if (a.dim_ != b.dim_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Scalar ExteriorForm::max_abs() const {
  Scalar worst = Scalar::zero(mode_);
  for (const auto& [index, coef] : terms_) {
    Scalar a = coef.abs();
    if (worst < a) worst = a;
  }
  return worst;
}

Scalar ExteriorForm::norm_squared() const {
  Scalar total = Scalar::zero(mode_);
  for (const auto& [index, coef] : terms_) total += coef * coef;
  return total;
}

ExteriorForm ExteriorForm::to_mode(ScalarMode mode) const {
  ExteriorForm out(dim_, degree_, mode);
  for (const auto& [index, coef] : terms_) out.accumulate(index, coef.to_mode(mode));
  return out;
}

namespace {

struct Expansion {
  const ExteriorForm::Terms& terms;
  const std::vector<ScalarVector>& vectors;
  ScalarMode mode;
  Scalar total;

  void run(std::size_t slot, std::uint64_t used, int inversions, const Scalar& product) {
    if (slot == vectors.size()) {
      auto it = terms.find(MultiIndex::from_bits(used));
      if (it == terms.end()) return;
      Scalar term = product * it->second;
      if (inversions % 2 == 0)
        total += term;
      else
        total -= term;
      return;
    }
    const ScalarVector& v = vectors[slot];
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero() || ((used >> k) & 1u)) continue;
      int extra = std::popcount(used & ~bits_at_or_below(static_cast<int>(k)));
      run(slot + 1, used | (std::uint64_t{1} << k), inversions + extra, product * v[k]);
    }
  }
};

}  // namespace

Scalar ExteriorForm::evaluate(const std::vector<ScalarVector>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_)
    throw std::invalid_argument("ExteriorForm::evaluate: need exactly degree() vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("ExteriorForm::evaluate: vector length mismatch");
  Expansion e{terms_, vectors, mode_, Scalar::zero(mode_)};
  e.run(0, 0, 0, Scalar::one(mode_));
  return e.total;
}

std::string ExteriorForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, coef] : terms_) {
    Scalar magnitude = coef;
    bool negative = coef.sign() < 0;
    if (negative) magnitude = -coef;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool unit = magnitude == Scalar::one(mode_);
    if (index.degree() == 0) {
      os << magnitude.str();
      continue;
    }
    if (!unit) os << magnitude.str() << "*";
    os << "e^{";
    auto idx = index.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << "}";
  }
  return os.str();
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.mode() != b.mode()) throw ArithmeticModeError("wedge: mixed modes");
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  ExteriorForm out(a.dim(), a.degree() + b.degree(), a.mode());
  if (a.degree() + b.degree() > a.dim()) return out;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      if (ia.bits() & ib.bits()) continue;
      Scalar c = ca * cb;
      out.accumulate(MultiIndex::from_bits(ia.bits() | ib.bits()), concatenation_sign(ia, ib) > 0 ? c : -c);
    }
  return out;
}

ExteriorForm interior(int j, const ExteriorForm& a) {
  if (j < 0 || j >= a.dim()) throw std::invalid_argument("interior: frame index out of range");
  if (a.degree() == 0) return ExteriorForm(a.dim(), 0, a.mode());
  ExteriorForm out(a.dim(), a.degree() - 1, a.mode());
  const std::uint64_t bit = std::uint64_t{1} << j;
  for (const auto& [index, coef] : a.terms()) {
    if (!(index.bits() & bit)) continue;
    out.accumulate(MultiIndex::from_bits(index.bits() & ~bit), index.position(j) % 2 == 0 ? coef : -coef);
  }
  return out;
}

ExteriorForm interior(const ScalarVector& v, const ExteriorForm& a) {
  if (static_cast<int>(v.size()) != a.dim()) throw std::invalid_argument("interior: vector length mismatch");
  ExteriorForm out(a.dim(), a.degree() == 0 ? 0 : a.degree() - 1, a.mode());
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) out += interior(static_cast<int>(j), a) * v[j];
  return out;
}

ExteriorForm hodge(const ExteriorForm& a) {
  const std::uint64_t full = a.dim() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.dim()) - 1;
  ExteriorForm out(a.dim(), a.dim() - a.degree(), a.mode());
  for (const auto& [index, coef] : a.terms()) {
    MultiIndex complement = MultiIndex::from_bits(full & ~index.bits());
    out.accumulate(complement, concatenation_sign(index, complement) > 0 ? coef : -coef);
  }
  return out;
}

ExteriorForm power(const ExteriorForm& a, int i) {
  if (a.degree() % 2 != 0) throw std::invalid_argument("power: form degree must be even");
  if (i < 0) throw std::invalid_argument("power: negative exponent");
  ExteriorForm out = ExteriorForm::constant(a.dim(), Scalar::one(a.mode()));
  for (int k = 0; k < i; ++k) out = wedge(out, a);
  return out;
}

}  // namespace griffiths
