#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affcl/errors.hpp"
#include "affcl/integer.hpp"

namespace affcl {

/// Dense row-major matrix of unbounded integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
      if (row.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  /// Builds a matrix with the given vectors as rows; `cols` is used when
  /// `rows` is empty.
  static IntegerMatrix from_rows(const std::vector<IntegerVector> &rows,
                                 std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(ErrorKind::DimensionMismatch,
                    "row " + std::to_string(i) + " has length " +
                        std::to_string(rows[i].size()) + ", expected " +
                        std::to_string(cols));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntegerMatrix from_columns(const std::vector<IntegerVector> &columns,
                                    std::size_t rows = 0) {
    return from_rows(columns, rows).transpose();
  }

  static IntegerMatrix column(std::span<const Integer> v) {
    IntegerMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  IntegerVector row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  IntegerVector column_vector(std::size_t j) const {
    IntegerVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<IntegerVector> row_vectors() const {
    std::vector<IntegerVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
  }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Integer &x) { return x == 0; });
  }

  // Elementary operations used by the normal form routines.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer &factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(target, j) += factor * (*this)(source, j);
  }
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source,
                        const Integer &factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, target) += factor * (*this)(i, source);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "cannot multiply " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " by " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer &aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline IntegerVector operator*(const IntegerMatrix &a,
                               std::span<const Integer> x) {
  if (a.cols() != x.size())
    throw Error(ErrorKind::DimensionMismatch,
                "matrix has " + std::to_string(a.cols()) +
                    " columns, vector has length " + std::to_string(x.size()));
  IntegerVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

inline IntegerVector operator*(const IntegerMatrix &a, const IntegerVector &x) {
  return a * std::span<const Integer>(x);
}

inline std::string to_string(const IntegerMatrix &m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += to_string(m.row(i));
  }
  return out + "]";
}

/// Fraction-free (Bareiss) determinant of a square matrix.
inline Integer determinant(IntegerMatrix m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

} // namespace affcl
