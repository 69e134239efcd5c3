#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bridgeland/error.hpp"
#include "bridgeland/numeric.hpp"

namespace bridgeland {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ValidationError("ragged matrix literal");
      for (const T& x : row) data_.push_back(x);
    }
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != out.cols_) throw ValidationError("ragged matrix");
      for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }
  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (T& x : out.data_) x *= s;
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw ValidationError("matrix-vector product: dimension mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * x[j];
    }
    return out;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m);
// Throws ValidationError when an entry is not integral.
IntegerMatrix to_integer(const RationalMatrix& m);

// x^T G y.
Rational bilinear(const RationalMatrix& gram, const RationalVector& x, const RationalVector& y);
Integer bilinear(const IntegerMatrix& gram, const IntegerVector& x, const IntegerVector& y);
Rational dot(const RationalVector& x, const RationalVector& y);

Rational determinant(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Throws ComputationError when singular.
RationalMatrix inverse(const RationalMatrix& m);
// Unique solution of A x = b; throws ComputationError when A is singular.
RationalVector solve(const RationalMatrix& a, const RationalVector& b);

// Reduced row echelon form; `pivots` receives the pivot columns.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivots = nullptr);
// Basis of {x : m x = 0}, one vector per free column, each scaled to a
// primitive integer vector.
std::vector<IntegerVector> nullspace(const RationalMatrix& m);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
// Inertia of a symmetric matrix by congruence diagonalization.
Signature signature(const RationalMatrix& symmetric);

std::vector<Rational> leading_principal_minors(const RationalMatrix& m);
bool is_positive_definite(const RationalMatrix& symmetric);
bool is_negative_definite(const RationalMatrix& symmetric);
// Positive semidefinite, via the inertia.
bool is_positive_semidefinite(const RationalMatrix& symmetric);

// Restriction of a form to span(basis): entries basis_i^T G basis_j.
RationalMatrix restrict_form(const RationalMatrix& gram, const std::vector<RationalVector>& basis);

// Row Hermite normal form (upper triangular, positive pivots, entries above
// each pivot reduced to [0, pivot)). Zero rows are dropped.
IntegerMatrix hermite_rows(const IntegerMatrix& m);

// Basis of the lattice {x in Z^n : m x = 0}, in Hermite normal form.
std::vector<IntegerVector> integer_kernel(const IntegerMatrix& m);

}  // namespace bridgeland
