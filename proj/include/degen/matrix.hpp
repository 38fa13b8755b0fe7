#ifndef DEGEN_MATRIX_HPP
#define DEGEN_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "degen/field.hpp"

namespace degen {

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols,
         std::vector<Scalar> entries);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_ints(FieldSpec field,
                          const std::vector<std::vector<long>>& rows);
  static Matrix diagonal(std::span<const Scalar> values);
  /// Block-diagonal sum; all blocks must share a field.
  static Matrix direct_sum(std::span<const Matrix> blocks);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  /// A - alpha * I
  Matrix shifted(const Scalar& alpha) const;
  Matrix power(unsigned k) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

}  // namespace degen

#endif
