#pragma once

// Dense matrices and exact Gauss-Jordan elimination over an ExactField.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "evokit/error.hpp"
#include "evokit/field.hpp"

namespace evokit {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <ExactField F>
Matrix<Scalar_t<F>> zero_matrix(const F& f, std::size_t rows, std::size_t cols) {
  return Matrix<Scalar_t<F>>(rows, cols, f.zero());
}

template <ExactField F>
Matrix<Scalar_t<F>> identity_matrix(const F& f, std::size_t n) {
  auto m = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <ExactField F>
Matrix<Scalar_t<F>> multiply(const F& f, const Matrix<Scalar_t<F>>& a, const Matrix<Scalar_t<F>>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  auto out = zero_matrix(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

/// Row vector times matrix.
template <ExactField F>
std::vector<Scalar_t<F>> apply(const F& f, std::span<const Scalar_t<F>> v, const Matrix<Scalar_t<F>>& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix product shape");
  std::vector<Scalar_t<F>> out(m.cols(), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

template <class T>
struct Echelon {
  Matrix<T> matrix;                  // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row, strictly increasing
};

/// Reduced row-echelon form with zero rows removed.
template <ExactField F>
Echelon<Scalar_t<F>> rref(const F& f, Matrix<Scalar_t<F>> m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    auto inv = m(rank, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col).is_zero()) continue;
      auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  Matrix<Scalar_t<F>> reduced(0, m.cols(), f.zero());
  for (std::size_t i = 0; i < rank; ++i) reduced.append_row(m.row(i));
  return {std::move(reduced), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const F& f, const Matrix<Scalar_t<F>>& m) {
  return rref(f, m).pivots.size();
}

/// Basis (as rows) of {x : M x = 0}.
template <ExactField F>
Matrix<Scalar_t<F>> kernel(const F& f, const Matrix<Scalar_t<F>>& m) {
  const std::size_t n = m.cols();
  auto ech = rref(f, m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Matrix<Scalar_t<F>> basis(0, n, f.zero());
  std::vector<Scalar_t<F>> v(n, f.zero());
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.matrix(r, free);
    basis.append_row(v);
  }
  return basis;
}

template <ExactField F>
Matrix<Scalar_t<F>> inverse(const F& f, const Matrix<Scalar_t<F>>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  if (n == 0) return m;
  auto aug = zero_matrix(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto ech = rref(f, std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  }
  auto out = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.matrix(i, n + j);
  }
  return out;
}

template <ExactField F>
bool is_invertible(const F& f, const Matrix<Scalar_t<F>>& m) {
  return m.rows() == m.cols() && rank(f, m) == m.rows();
}

}  // namespace evokit
