#include "degen/matrix.hpp"

#include "degen/error.hpp"

namespace degen {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      entries_(rows * cols, Scalar(field)) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols,
               std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    fail(ErrorCode::InvalidArgument, "entry count does not match shape");
  for (const auto& e : entries_)
    if (!(e.field() == field_))
      fail(ErrorCode::InvalidArgument, "matrix entries must share the field");
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_ints(FieldSpec field,
                         const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      fail(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(field, rows[i][j]);
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> values) {
  if (values.empty()) fail(ErrorCode::InvalidArgument, "empty diagonal");
  Matrix m(values.front().field(), values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::direct_sum(std::span<const Matrix> blocks) {
  if (blocks.empty()) fail(ErrorCode::InvalidArgument, "empty direct sum");
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) fail(ErrorCode::InvalidArgument, "non-square block");
    n += b.rows();
  }
  Matrix m(blocks.front().field(), n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        m(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    fail(ErrorCode::InvalidArgument, "shape mismatch in product");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorCode::InvalidArgument, "shape mismatch in sum");
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] += rhs.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorCode::InvalidArgument, "shape mismatch in difference");
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] -= rhs.entries_[i];
  return out;
}

Matrix Matrix::shifted(const Scalar& alpha) const {
  if (!is_square()) fail(ErrorCode::InvalidArgument, "shift of non-square");
  Matrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out(i, i) -= alpha;
  return out;
}

Matrix Matrix::power(unsigned k) const {
  if (!is_square()) fail(ErrorCode::InvalidArgument, "power of non-square");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace degen
