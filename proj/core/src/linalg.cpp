#include "griffiths/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace griffiths {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, ScalarMode mode)
    : rows_(rows), cols_(cols), mode_(mode), data_(rows * cols, Scalar::zero(mode)) {}

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("ScalarMatrix: entry count mismatch");
  mode_ = data_.empty() ? ScalarMode::exact : data_.front().mode();
  for (const auto& x : data_)
    if (x.mode() != mode_) throw ArithmeticModeError("ScalarMatrix: mixed entry modes");
}

ScalarMatrix ScalarMatrix::identity(std::size_t n, ScalarMode mode) {
  ScalarMatrix m(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(mode);
  return m;
}

ScalarMatrix ScalarMatrix::diagonal(const ScalarVector& entries) {
  ScalarMode mode = entries.empty() ? ScalarMode::exact : entries.front().mode();
  ScalarMatrix m(entries.size(), entries.size(), mode);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ScalarVector ScalarMatrix::row(std::size_t r) const {
  return ScalarVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ScalarVector ScalarMatrix::column(std::size_t c) const {
  ScalarVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_, mode_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("ScalarMatrix: shape mismatch in product");
  ScalarMatrix out(rows_, rhs.cols_, mode_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (!rhs(k, c).is_zero()) out(r, c) += a * rhs(k, c);
    }
  return out;
}

ScalarVector ScalarMatrix::operator*(const ScalarVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("ScalarMatrix: shape mismatch in matrix-vector product");
  ScalarVector out(rows_, Scalar::zero(mode_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("ScalarMatrix: shape mismatch");
  ScalarMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("ScalarMatrix: shape mismatch");
  ScalarMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& factor) const {
  ScalarMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

bool ScalarMatrix::operator==(const ScalarMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool ScalarMatrix::is_symmetric(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c) {
      Scalar diff = ((*this)(r, c) - (*this)(c, r)).abs();
      if (mode_ == ScalarMode::exact ? !diff.is_zero() : diff.to_double() > tol) return false;
    }
  return true;
}

Scalar ScalarMatrix::max_abs_difference(const ScalarMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("ScalarMatrix: shape mismatch");
  Scalar worst = Scalar::zero(mode_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    Scalar d = (data_[i] - rhs.data_[i]).abs();
    if (worst < d) worst = d;
  }
  return worst;
}

ScalarMatrix ScalarMatrix::to_mode(ScalarMode mode) const {
  ScalarMatrix out = *this;
  out.mode_ = mode;
  for (auto& x : out.data_) x = x.to_mode(mode);
  return out;
}

namespace {

// Index of the pivot row for column `col` at or below `from`, or -1.
long choose_pivot(const ScalarMatrix& m, std::size_t from, std::size_t col, double tol) {
  if (m.mode() == ScalarMode::exact) {
    for (std::size_t r = from; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) return static_cast<long>(r);
    return -1;
  }
  long best = -1;
  double best_abs = tol;
  for (std::size_t r = from; r < m.rows(); ++r) {
    double a = std::fabs(m(r, col).to_double());
    if (a > best_abs) {
      best_abs = a;
      best = static_cast<long>(r);
    }
  }
  return best;
}

void swap_rows(ScalarMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Scalar determinant(ScalarMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.mode());
  for (std::size_t col = 0; col < n; ++col) {
    long p = choose_pivot(m, col, col, 0.0);
    if (p < 0) return Scalar::zero(m.mode());
    if (static_cast<std::size_t>(p) != col) {
      swap_rows(m, static_cast<std::size_t>(p), col);
      det = -det;
    }
    const Scalar pivot = m(col, col);
    det *= pivot;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar factor = m(r, col) / pivot;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::vector<ScalarVector> null_space(ScalarMatrix m, double tol) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const ScalarMode mode = m.mode();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    long p = choose_pivot(m, row, col, tol);
    if (p < 0) continue;
    swap_rows(m, static_cast<std::size_t>(p), row);
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) m(r, c) -= factor * m(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(cols, Scalar::zero(mode));
    v[free] = Scalar::one(mode);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar dot(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar acc = Scalar::zero(a.empty() ? ScalarMode::exact : a.front().mode());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace griffiths
