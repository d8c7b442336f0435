#pragma once

/**
 * @file series.hpp
 * @brief Power subspaces E^k, the upper annihilating series, nilpotency and type.
 *
 * The power sequence is E^1 = E and E^k = sum_{i=1}^{k-1} E^i E^{k-i}; by
 * commutativity only i <= floor(k/2) is needed. The sequence is decreasing.
 * It is not true that E^k = E^{k+1} forces stabilization (for the chain
 * e_1^2 = e_2, e_2^2 = e_3, e_3^2 = e_4 one gets E^3 = E^4 != E^5). What does
 * hold: if E^m = E^{m+1} = ... = E^{2m-1} for some m >= 2, then every later
 * term equals E^m. power_chain stops on that condition or on E^k = 0.
 *
 * ann^i is computed as the preimage {x : x E ⊆ ann^{i-1}}, which is the
 * quotient definition unwound for a commutative algebra.
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "evokit/algebra.hpp"

namespace evokit {

template <ExactField F>
struct PowerChain {
  std::vector<Subspace<F>> spaces;  // spaces[k-1] = E^k
  bool complete = true;             // false when truncated by max_k before stabilizing

  bool reaches_zero() const { return !spaces.empty() && spaces.back().is_zero(); }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& s : spaces) out.push_back(s.dim());
    return out;
  }
};

template <ExactField F>
struct AnnihilatorChain {
  std::vector<Subspace<F>> spaces;  // spaces[i] = ann^i, spaces[0] = 0, strictly increasing

  const Subspace<F>& top() const { return spaces.back(); }
  bool reaches_whole() const { return spaces.back().is_whole(); }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& s : spaces) out.push_back(s.dim());
    return out;
  }
};

struct TypeSignature {
  std::vector<std::size_t> parts;

  std::size_t total() const {
    std::size_t s = 0;
    for (auto p : parts) s += p;
    return s;
  }
  friend bool operator==(const TypeSignature&, const TypeSignature&) = default;
};

/// E^k for k = 1, 2, ... until provably stable, zero, or k = max_k.
template <ExactField F>
PowerChain<F> power_chain(const StructureTensor<F>& t,
                          std::size_t max_k = std::numeric_limits<std::size_t>::max()) {
  const F& f = t.field();
  const std::size_t n = t.dim();
  PowerChain<F> chain;
  // distinct subspaces seen so far; id_of[k-1] indexes into it
  std::vector<Subspace<F>> distinct{Subspace<F>::whole(f, n)};
  std::vector<std::size_t> id_of{0};
  std::map<std::pair<std::size_t, std::size_t>, Subspace<F>> products;
  chain.spaces.push_back(distinct[0]);

  auto product_of = [&](std::size_t a, std::size_t b) -> const Subspace<F>& {
    if (a > b) std::swap(a, b);
    auto it = products.find({a, b});
    if (it == products.end()) it = products.emplace(std::pair{a, b}, subspace_product(t, distinct[a], distinct[b])).first;
    return it->second;
  };

  std::size_t plateau_start = 1;  // smallest m with E^m = ... = E^{current k}
  for (std::size_t k = 2;; ++k) {
    if (k > max_k) {
      chain.complete = false;
      break;
    }
    std::vector<std::pair<std::size_t, std::size_t>> terms;
    for (std::size_t i = 1; i <= k / 2; ++i) {
      auto a = id_of[i - 1], b = id_of[k - i - 1];
      terms.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    Subspace<F> ek = Subspace<F>::zero(f, n);
    for (auto [a, b] : terms) ek = ek + product_of(a, b);

    std::size_t id = distinct.size();
    for (std::size_t d = 0; d < distinct.size(); ++d) {
      if (distinct[d] == ek) {
        id = d;
        break;
      }
    }
    if (id == distinct.size()) distinct.push_back(ek);
    if (id != id_of.back()) plateau_start = k;
    id_of.push_back(id);
    chain.spaces.push_back(std::move(ek));

    if (chain.spaces.back().is_zero()) break;
    const std::size_t m = std::max<std::size_t>(plateau_start, 2);
    if (k > m && k >= 2 * m - 1) break;
  }
  return chain;
}

/// {x : x e_j ∈ S for every basis vector e_j}.
template <ExactField F>
Subspace<F> annihilator_step(const StructureTensor<F>& t, const Subspace<F>& s) {
  const F& f = t.field();
  const std::size_t n = t.dim();
  if (s.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from algebra");
  if (!(s.field() == f)) throw Error(ErrorCode::FieldMismatch, "subspace and algebra fields differ");

  std::vector<bool> is_pivot(n, false);
  for (auto p : s.pivots()) is_pivot[p] = true;

  // Constraint rows: for each j and each non-pivot coordinate k,
  // sum_i x_i * reduce(e_i e_j)[k] = 0.
  std::vector<std::vector<Scalar_t<F>>> reduced(n);  // reused per j
  auto constraints = zero_matrix(f, 0, n);
  std::vector<Scalar_t<F>> row(n, f.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) reduced[i] = s.reduce(t.product(i, j));
    for (std::size_t k = 0; k < n; ++k) {
      if (is_pivot[k]) continue;
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = reduced[i][k];
        any = any || !row[i].is_zero();
      }
      if (any) constraints.append_row(row);
    }
  }
  return Subspace<F>::span(f, kernel(f, constraints));
}

template <ExactField F>
AnnihilatorChain<F> ann_chain(const StructureTensor<F>& t) {
  AnnihilatorChain<F> chain;
  chain.spaces.push_back(Subspace<F>::zero(t.field(), t.dim()));
  while (true) {
    auto next = annihilator_step(t, chain.spaces.back());
    if (next == chain.spaces.back()) break;
    chain.spaces.push_back(std::move(next));
  }
  return chain;
}

template <ExactField F>
struct Nilpotency {
  bool nilpotent = false;
  AnnihilatorChain<F> ann;
  PowerChain<F> powers;
  /// Smallest k with E^k = 0, when nilpotent.
  std::optional<std::size_t> index;
};

/// Decides nilpotency by the annihilator series and cross-checks it against
/// the power chain; a disagreement is an internal error.
template <ExactField F>
Nilpotency<F> is_nilpotent(const StructureTensor<F>& t) {
  Nilpotency<F> out{false, ann_chain(t), power_chain(t), std::nullopt};
  out.nilpotent = out.ann.reaches_whole();
  if (out.nilpotent != out.powers.reaches_zero()) {
    throw std::logic_error("annihilator series and power chain disagree on nilpotency");
  }
  if (out.nilpotent) out.index = out.powers.spaces.size();
  return out;
}

template <ExactField F>
TypeSignature type_from_chain(const AnnihilatorChain<F>& chain) {
  if (!chain.reaches_whole()) {
    throw Error(ErrorCode::NotNilpotent, "annihilator series stabilizes at dimension " +
                                             std::to_string(chain.top().dim()) + " of " +
                                             std::to_string(chain.top().ambient_dim()));
  }
  TypeSignature sig;
  for (std::size_t i = 1; i < chain.spaces.size(); ++i) {
    sig.parts.push_back(chain.spaces[i].dim() - chain.spaces[i - 1].dim());
  }
  return sig;
}

template <ExactField F>
TypeSignature type_signature(const StructureTensor<F>& t) {
  return type_from_chain(ann_chain(t));
}

}  // namespace evokit
