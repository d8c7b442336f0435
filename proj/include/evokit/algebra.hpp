#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional commutative algebras given by structure constants.
 *
 * An EvolutionMatrix A = (a_ij) describes an evolution algebra in a natural
 * basis: e_i e_j = 0 for i != j and e_i^2 = sum_k a_ik e_k. A StructureTensor
 * describes an arbitrary commutative algebra (e_i e_j = sum_k c_ijk e_k) and
 * is what every analysis routine consumes; basis changes generally leave the
 * evolution form, so the tensor is the common currency.
 *
 * Element coordinates are row vectors in the ambient basis. All indices are
 * 0-based in the API; files and printed output use 1-based labels.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "evokit/matrix.hpp"
#include "evokit/subspace.hpp"

namespace evokit {

template <ExactField F>
class EvolutionMatrix {
 public:
  using value_type = Scalar_t<F>;

  EvolutionMatrix(const F& f, std::size_t n) : field_(f), entries_(zero_matrix(f, n, n)) {
    if (n == 0) throw Error(ErrorCode::BadShape, "algebra dimension must be at least 1");
  }
  EvolutionMatrix(const F& f, Matrix<value_type> entries) : field_(f), entries_(std::move(entries)) {
    if (entries_.rows() == 0) throw Error(ErrorCode::BadShape, "algebra dimension must be at least 1");
    if (entries_.rows() != entries_.cols()) throw Error(ErrorCode::BadShape, "structure matrix must be square");
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return entries_.rows(); }
  const Matrix<value_type>& entries() const { return entries_; }

  /// a_ij: coefficient of e_j in e_i^2.
  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  value_type& operator()(std::size_t i, std::size_t j) { return entries_(i, j); }

  friend bool operator==(const EvolutionMatrix& a, const EvolutionMatrix& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  F field_;
  Matrix<value_type> entries_;
};

/// Commutative structure constants; only products e_i e_j with i <= j are stored.
template <ExactField F>
class StructureTensor {
 public:
  using value_type = Scalar_t<F>;

  StructureTensor(const F& f, std::size_t n)
      : field_(f), dim_(n), products_(n * (n + 1) / 2 * n, f.zero()), nonzero_(n * (n + 1) / 2, false) {
    if (n == 0) throw Error(ErrorCode::BadShape, "algebra dimension must be at least 1");
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  /// Coordinates of e_i e_j (symmetric in i, j).
  std::span<const value_type> product(std::size_t i, std::size_t j) const {
    return {products_.data() + pair_index(i, j) * dim_, dim_};
  }

  const value_type& coefficient(std::size_t i, std::size_t j, std::size_t k) const { return product(i, j)[k]; }

  void set(std::size_t i, std::size_t j, std::size_t k, const value_type& c) {
    if (k >= dim_) throw Error(ErrorCode::DimensionMismatch, "tensor index out of range");
    auto p = pair_index(i, j);
    products_[p * dim_ + k] = c;
    refresh(p);
  }

  void set_product(std::size_t i, std::size_t j, std::span<const value_type> coords) {
    if (coords.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "product vector length");
    auto p = pair_index(i, j);
    std::copy(coords.begin(), coords.end(), products_.begin() + static_cast<std::ptrdiff_t>(p * dim_));
    refresh(p);
  }

  bool product_is_zero(std::size_t i, std::size_t j) const { return !nonzero_[pair_index(i, j)]; }

  /// True when all off-diagonal products vanish, i.e. the basis is natural.
  bool is_evolution() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        if (!product_is_zero(i, j)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.products_ == b.products_;
  }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return i * dim_ - i * (i - 1) / 2 + (j - i);
  }

  void refresh(std::size_t p) {
    bool any = false;
    for (std::size_t k = 0; k < dim_; ++k) any = any || !products_[p * dim_ + k].is_zero();
    nonzero_[p] = any;
  }

  F field_;
  std::size_t dim_;
  std::vector<value_type> products_;
  std::vector<bool> nonzero_;
};

template <ExactField F>
StructureTensor<F> evolution_to_tensor(const EvolutionMatrix<F>& a) {
  StructureTensor<F> t(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) t.set_product(i, i, a.entries().row(i));
  return t;
}

/// Inverse of evolution_to_tensor; empty when some off-diagonal product is nonzero.
template <ExactField F>
std::optional<EvolutionMatrix<F>> tensor_to_evolution(const StructureTensor<F>& t) {
  if (!t.is_evolution()) return std::nullopt;
  EvolutionMatrix<F> a(t.field(), t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    auto sq = t.product(i, i);
    for (std::size_t k = 0; k < t.dim(); ++k) a(i, k) = sq[k];
  }
  return a;
}

/// Bilinear extension of the basis products.
template <ExactField F>
std::vector<Scalar_t<F>> multiply(const StructureTensor<F>& t, std::span<const Scalar_t<F>> x,
                                  std::span<const Scalar_t<F>> y) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "element length differs from dim");
  const F& f = t.field();
  std::vector<Scalar_t<F>> out(n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (t.product_is_zero(i, j)) continue;
      Scalar_t<F> coeff = x[i] * y[j];
      if (i != j) coeff += x[j] * y[i];
      if (coeff.is_zero()) continue;
      auto c = t.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) out[k] += coeff * c[k];
      }
    }
  }
  return out;
}

template <ExactField F>
std::vector<Scalar_t<F>> basis_vector(const F& f, std::size_t n, std::size_t i) {
  std::vector<Scalar_t<F>> v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

/// Span of all products s*w, s and w ranging over bases of S and W.
template <ExactField F>
Subspace<F> subspace_product(const StructureTensor<F>& t, const Subspace<F>& s, const Subspace<F>& w) {
  const std::size_t n = t.dim();
  if (s.ambient_dim() != n || w.ambient_dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from algebra");
  }
  auto gens = zero_matrix(t.field(), 0, n);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = 0; b < w.dim(); ++b) {
      auto p = multiply(t, s.basis().row(a), w.basis().row(b));
      gens.append_row(p);
    }
  }
  return Subspace<F>::span(t.field(), gens);
}

/// Re-expresses the algebra in the basis f_i = sum_j P_ij e_j.
template <ExactField F>
StructureTensor<F> change_basis(const StructureTensor<F>& t, const Matrix<Scalar_t<F>>& p) {
  const std::size_t n = t.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis change matrix shape");
  const F& f = t.field();
  auto p_inv = inverse(f, p);
  StructureTensor<F> out(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto in_old = multiply(t, p.row(i), p.row(j));
      out.set_product(i, j, apply(f, std::span<const Scalar_t<F>>(in_old), p_inv));
    }
  }
  return out;
}

}  // namespace evokit
