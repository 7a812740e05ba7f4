#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gdecomp/error.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

/// Dense rows x cols matrix of Rationals with no structural constraints. Used
/// for decomposing matrices X (not symmetric in general) and operator layers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != out.cols_) {
        throw Error(ErrorCode::OrderMismatch, "ragged rows");
      }
      for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Rational row_sum(std::size_t i) const {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
    return s;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Symmetric, entrywise nonnegative m x m matrix: the carrier type for points
/// of U_m. Both properties are checked on construction and cannot be broken
/// afterwards (no mutable access).
class SymMatrix {
 public:
  SymMatrix() = default;

  /// `entries` is row-major, m*m long.
  SymMatrix(std::size_t order, std::vector<Rational> entries)
      : order_(order), data_(std::move(entries)) {
    if (data_.size() != order_ * order_) {
      throw Error(ErrorCode::OrderMismatch,
                  "expected " + std::to_string(order_ * order_) + " entries");
    }
    validate();
  }

  explicit SymMatrix(const Matrix& m) : order_(m.rows()) {
    if (!m.square()) throw Error(ErrorCode::OrderMismatch, "matrix is not square");
    data_.reserve(order_ * order_);
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) data_.push_back(m(i, j));
    }
    validate();
  }

  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    return SymMatrix(Matrix::from_rows(rows));
  }

  static SymMatrix zero(std::size_t m) {
    return SymMatrix(m, std::vector<Rational>(m * m));
  }

  static SymMatrix identity(std::size_t m) {
    std::vector<Rational> e(m * m);
    for (std::size_t i = 0; i < m; ++i) e[i * m + i] = 1;
    return SymMatrix(m, std::move(e));
  }

  std::size_t order() const noexcept { return order_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }

  const std::vector<Rational>& entries() const noexcept { return data_; }

  Rational total_sum() const {
    Rational s;
    for (const auto& v : data_) s += v;
    return s;
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < order_; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
    return true;
  }

  Matrix to_matrix() const {
    Matrix m(order_, order_);
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) m(i, j) = (*this)(i, j);
    }
    return m;
  }

  /// Copy with a_{ij} = a_{ji} = value.
  SymMatrix with_entry(std::size_t i, std::size_t j, const Rational& value) const {
    std::vector<Rational> e = data_;
    e[i * order_ + j] = value;
    e[j * order_ + i] = value;
    return SymMatrix(order_, std::move(e));
  }

  /// Row-major textual key; equal matrices have equal keys.
  std::string key() const {
    std::string k = std::to_string(order_);
    for (const auto& v : data_) {
      k.push_back(' ');
      k += to_string(v);
    }
    return k;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = i + 1; j < order_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) {
          throw Error(ErrorCode::AsymmetricInput,
                      "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") != a(" + std::to_string(j + 1) + "," +
                          std::to_string(i + 1) + ")");
        }
      }
    }
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) {
        if ((*this)(i, j) < 0) {
          throw Error(ErrorCode::NegativeEntry,
                      "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") = " + to_string((*this)(i, j)));
        }
      }
    }
  }

  std::size_t order_ = 0;
  std::vector<Rational> data_;
};

/// Sum of two symmetric matrices scaled: alpha*A + beta*B.
inline SymMatrix combine(const Rational& alpha, const SymMatrix& a,
                         const Rational& beta, const SymMatrix& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::OrderMismatch, "combine");
  std::vector<Rational> e(a.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    e[k] = alpha * a.entries()[k] + beta * b.entries()[k];
  }
  return SymMatrix(a.order(), std::move(e));
}

}  // namespace gdecomp
