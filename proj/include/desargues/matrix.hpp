#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "desargues/errors.hpp"
#include "desargues/gaussian_rational.hpp"

namespace desargues {

/// Dense row-major matrix. Shapes with zero rows or columns are valid and
/// stand for the empty basis or the zero map.
template <class T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
  static DenseMatrix from_columns(std::span<const std::vector<T>> columns, std::size_t rows) {
    DenseMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) {
        throw ShapeError("column " + std::to_string(j) + " has length " + std::to_string(columns[j].size()) +
                         ", expected " + std::to_string(rows));
      }
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<GaussianRational>;
using FloatMatrix = DenseMatrix<ComplexFloat>;
using ExactVector = std::vector<GaussianRational>;
using FloatVector = std::vector<ComplexFloat>;

template <class T>
DenseMatrix<T> adjoint(const DenseMatrix<T>& m) {
  DenseMatrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, GaussianRational>) {
        out(j, i) = m(i, j).conj();
      } else {
        out(j, i) = std::conj(m(i, j));
      }
    }
  return out;
}

template <class T>
DenseMatrix<T> transpose(const DenseMatrix<T>& m) {
  DenseMatrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

/// Matrix product. Throws ShapeError unless a.cols() == b.rows().
template <class T>
DenseMatrix<T> mat_mul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  DenseMatrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  return mat_mul(a, b);
}

template <class T>
DenseMatrix<T> operator+(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  DenseMatrix<T> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

template <class T>
DenseMatrix<T> operator-(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix difference shape mismatch");
  DenseMatrix<T> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

/// Side-by-side concatenation [a | b]. Row counts must agree.
template <class T>
DenseMatrix<T> hstack(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row count mismatch");
  DenseMatrix<T> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

template <class T>
T trace(const DenseMatrix<T>& m) {
  if (m.rows() != m.cols()) throw ShapeError("trace of non-square matrix");
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

bool is_zero(const ExactMatrix& m);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon rref(ExactMatrix m);

/// Reduced column echelon form of the column space. `canonical` keeps only
/// the rank nonzero columns; column j has its leading entry 1 at pivot row
/// p_j, p_0 < p_1 < ..., and every other column is zero in row p_j.
struct ColumnEchelon {
  ExactMatrix canonical;
  std::size_t rank = 0;
};

ColumnEchelon rcef(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {x : m x = 0}, one column per free variable.
ExactMatrix null_space(const ExactMatrix& m);

/// Exact inverse of a Gram matrix A^dagger A. Throws SingularMatrix if the
/// caller's full-column-rank promise does not hold.
ExactMatrix invert_gram(const ExactMatrix& g);

/// Coefficients c with basis * c == v, or nullopt when v is outside the span.
/// Unique whenever the basis columns are independent.
std::optional<ExactVector> solve_in_span(const ExactMatrix& basis, const ExactVector& v);

/// Entrywise nearest-double conversion. Throws NonFiniteConversion.
FloatMatrix to_float(const ExactMatrix& m);
FloatVector to_float(const ExactVector& v);

/// Rank of a floating-point matrix by column-pivoted Gram-Schmidt; a residual
/// column is dependent when its norm is below tol::kFloatRankRelative times
/// the largest input column norm.
std::size_t float_rank(const FloatMatrix& m);

/// First nonzero entry scaled to 1. Zero vectors are returned unchanged.
ExactVector normalize_leading(ExactVector v);

}  // namespace desargues
