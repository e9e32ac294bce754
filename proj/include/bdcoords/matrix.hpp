#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bdcoords/scalar.hpp"

namespace bdcoords {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Mode mode = Mode::Exact);
  /// Exact integer matrix from nested lists, e.g. {{1, 2}, {3, 4}}.
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n, Mode mode = Mode::Exact);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Matrix transpose() const;

  /// Common mode of all entries; throws ModeError when entries disagree.
  Mode uniform_mode() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace bdcoords
