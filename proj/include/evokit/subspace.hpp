#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "evokit/matrix.hpp"

namespace evokit {

/// Subspace of F^n stored as its unique reduced row-echelon basis, so that
/// equality of subspaces is equality of representations.
template <ExactField F>
class Subspace {
 public:
  using value_type = Scalar_t<F>;

  static Subspace zero(const F& f, std::size_t n) { return Subspace(f, n, Echelon<value_type>{zero_matrix(f, 0, n), {}}); }

  static Subspace whole(const F& f, std::size_t n) {
    std::vector<std::size_t> pivots(n);
    for (std::size_t i = 0; i < n; ++i) pivots[i] = i;
    return Subspace(f, n, Echelon<value_type>{identity_matrix(f, n), std::move(pivots)});
  }

  /// Span of the rows of `generators` (any number of rows, possibly dependent).
  static Subspace span(const F& f, const Matrix<value_type>& generators) {
    return Subspace(f, generators.cols(), rref(f, generators));
  }

  static Subspace span(const F& f, std::size_t n, const std::vector<std::vector<value_type>>& generators) {
    auto m = zero_matrix(f, 0, n);
    for (const auto& g : generators) m.append_row(g);
    return span(f, m);
  }

  /// Span of the standard basis vectors with the given (0-based) indices.
  static Subspace coordinate(const F& f, std::size_t n, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    auto m = zero_matrix(f, indices.size(), n);
    for (std::size_t r = 0; r < indices.size(); ++r) m(r, indices[r]) = f.one();
    return Subspace(f, n, Echelon<value_type>{std::move(m), std::move(indices)});
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }
  const Matrix<value_type>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis; the result is zero iff v lies in the subspace.
  std::vector<value_type> reduce(std::span<const value_type> v) const {
    check_length(v.size());
    std::vector<value_type> out(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      auto coeff = out[pivots_[r]];
      if (coeff.is_zero()) continue;
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) out[j] -= coeff * basis_(r, j);
    }
    return out;
  }

  bool contains(std::span<const value_type> v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const value_type& x) { return x.is_zero(); });
  }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    for (std::size_t r = 0; r < other.dim(); ++r) {
      if (!contains(other.basis_.row(r))) return false;
    }
    return true;
  }

  /// True iff every basis row is a standard basis vector.
  bool is_coordinate() const {
    for (std::size_t r = 0; r < dim(); ++r) {
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (j != pivots_[r] && !basis_(r, j).is_zero()) return false;
      }
    }
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto m = a.basis_;
    for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis_.row(r));
    return span(a.field_, m);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(const F& f, std::size_t n, Echelon<value_type> ech)
      : field_(f), ambient_(n), basis_(std::move(ech.matrix)), pivots_(std::move(ech.pivots)) {}

  void check_length(std::size_t len) const {
    if (len != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  }
  void check_compatible(const Subspace& other) const {
    if (!(field_ == other.field_)) throw Error(ErrorCode::FieldMismatch, "subspaces over different fields");
    check_length(other.ambient_);
  }

  F field_;
  std::size_t ambient_;
  Matrix<value_type> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace evokit
