#pragma once

#include <cstddef>
#include <vector>

#include "griffiths/scalar.hpp"

namespace griffiths {

using ScalarVector = std::vector<Scalar>;

/// Dense row-major matrix over Scalar. All entries share one mode.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols, ScalarMode mode = ScalarMode::exact);
  ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major);

  static ScalarMatrix identity(std::size_t n, ScalarMode mode = ScalarMode::exact);
  static ScalarMatrix diagonal(const ScalarVector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ScalarMode mode() const { return mode_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ScalarVector row(std::size_t r) const;
  ScalarVector column(std::size_t c) const;

  ScalarMatrix transpose() const;
  ScalarMatrix operator*(const ScalarMatrix& rhs) const;
  ScalarVector operator*(const ScalarVector& v) const;
  ScalarMatrix operator+(const ScalarMatrix& rhs) const;
  ScalarMatrix operator-(const ScalarMatrix& rhs) const;
  ScalarMatrix scaled(const Scalar& factor) const;

  bool operator==(const ScalarMatrix& rhs) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric(double tol = 0.0) const;
  /// Largest absolute entry of this - rhs.
  Scalar max_abs_difference(const ScalarMatrix& rhs) const;

  ScalarMatrix to_mode(ScalarMode mode) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ScalarMode mode_ = ScalarMode::exact;
  std::vector<Scalar> data_;
};

/// Determinant by Gaussian elimination (first nonzero pivot when exact,
/// partial pivoting when floating).
Scalar determinant(ScalarMatrix m);

/// Basis of the right null space by reduced row echelon form. Floating
/// matrices treat pivots with |x| <= tol as zero.
std::vector<ScalarVector> null_space(ScalarMatrix m, double tol = 1e-12);

Scalar dot(const ScalarVector& a, const ScalarVector& b);

}  // namespace griffiths
