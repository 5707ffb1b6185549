#ifndef APOLAR_MATRIX_HPP
#define APOLAR_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Rational> row(std::size_t i) const;
  void append_row(const std::vector<Rational>& r);
  // Rows stacked: this on top of other (column counts must agree; an empty
  // matrix adapts its width).
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace apolar

#endif  // APOLAR_MATRIX_HPP
