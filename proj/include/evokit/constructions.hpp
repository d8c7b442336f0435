#pragma once

/**
 * @file constructions.hpp
 * @brief Structure matrices of the nilpotent evolution algebra families.
 *
 * Bilinear forms and symmetric endomorphisms enter only in diagonalized form:
 * a Gram diagonal (lambda_1..lambda_n, all nonzero) in an orthogonal basis and
 * eigenvalue tables of the commuting endomorphisms on that basis. Every builder
 * emits its algebra in a basis adapted to the annihilator series, with the
 * deepest layer (ann^1) at the end.
 *
 * Families, with D the total dimension:
 *  - type_ones(n, k):  e_i^2 = sum_j lambda_ij e_{n+j} (i <= n), e_{n+j}^2 = e_{n+j+1},
 *                      type [1 x k, n].
 *  - bnk(n, k):        h_i^2 = h_{n+1} (i <= n), h_i^2 = h_{i+1} + h_{i+2} in the tail.
 *  - elr(l, n, r):     chain of length l, fan-out into U through u, fan-in to a
 *                      chain of length r.
 *  - ma1/ma2/ma12:     strictly upper triangular tables compatible with the
 *                      type [1 x l, n, 1 x r] filtration.
 *  - eub(n):           e_i^2 = lambda_i e_{n+2}, type [2, n].
 *  - chain(m_1..m_k):  level i squares land in level i+1.
 */

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "evokit/algebra.hpp"

namespace evokit {

template <ExactField F>
struct TypeOnesParams {
  std::size_t n = 1;
  std::size_t k = 1;
  std::vector<Scalar_t<F>> gram;                 // lambda_1..lambda_n
  std::vector<std::vector<Scalar_t<F>>> eigen;   // eigen[j][i]: eigenvalue of f_{j+1} on u_i, (k-1) x n
};

template <ExactField F>
struct ElrParams {
  std::size_t l = 1;
  std::size_t n = 1;
  std::size_t r = 1;
  std::vector<Scalar_t<F>> gram;
  std::vector<Scalar_t<F>> u_coords;  // u = sum c_k u_k, not all zero
};

template <ExactField F>
struct ChainParams {
  std::vector<std::size_t> dims;  // m_1..m_k
  // squares[i][p] = coordinates of xi_i(u_ip, u_ip) in level i+1, for i < k-1
  std::vector<std::vector<std::vector<Scalar_t<F>>>> squares;
};

template <ExactField F>
struct TableEntry {
  std::size_t i = 0;  // 0-based row: h_{i+1}^2
  std::size_t j = 0;  // 0-based column
  Scalar_t<F> value;
};

template <ExactField F>
struct Ma1Params {
  std::size_t l = 1;
  std::size_t n = 1;
  std::size_t r = 1;
  std::vector<TableEntry<F>> alpha;
};

template <ExactField F>
struct Ma2Params {
  std::size_t l = 1;
  std::size_t n = 1;
  std::size_t r = 2;
  Scalar_t<F> c;
  std::vector<TableEntry<F>> alpha;  // must not touch row l (h_{l+1})
};

template <ExactField F>
struct Ma12Params {
  std::size_t l = 2;
  std::size_t n = 1;
  std::size_t r = 2;
  std::vector<std::vector<Scalar_t<F>>> alpha;  // n x r: h_{l+t}^2 = sum_s alpha[t][s] h_{l+n+s}
};

namespace detail {

template <class T>
void require_nonzero_gram(const std::vector<T>& gram, std::size_t n) {
  if (gram.size() != n) throw Error(ErrorCode::BadShape, "gram must have " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].is_zero()) throw Error(ErrorCode::ZeroGramEntry, "lambda_" + std::to_string(i + 1) + " is zero");
  }
}

inline void require_positive(std::size_t value, const char* name) {
  if (value == 0) throw Error(ErrorCode::BadShape, std::string(name) + " must be at least 1");
}

}  // namespace detail

template <ExactField F>
EvolutionMatrix<F> build_type_ones(const F& f, const TypeOnesParams<F>& p) {
  detail::require_positive(p.n, "n");
  detail::require_positive(p.k, "k");
  detail::require_nonzero_gram(p.gram, p.n);
  if (p.eigen.size() != p.k - 1) throw Error(ErrorCode::BadShape, "eigen must have k-1 rows");
  for (const auto& row : p.eigen) {
    if (row.size() != p.n) throw Error(ErrorCode::BadShape, "each eigen row must have n entries");
  }
  const std::size_t n = p.n, k = p.k;
  EvolutionMatrix<F> a(f, n + k);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, n) = p.gram[i];
    for (std::size_t j = 1; j < k; ++j) a(i, n + j) = p.eigen[j - 1][i] * p.gram[i];
  }
  for (std::size_t i = n; i + 1 < n + k; ++i) a(i, i + 1) = f.one();
  return a;
}

template <ExactField F>
EvolutionMatrix<F> build_bnk(const F& f, std::size_t n, std::size_t k) {
  detail::require_positive(n, "n");
  if (k < 2) throw Error(ErrorCode::BadShape, "bnk needs k >= 2");
  const std::size_t dim = n + k;
  EvolutionMatrix<F> a(f, dim);
  for (std::size_t i = 0; i < n; ++i) a(i, n) = f.one();
  for (std::size_t i = n; i + 2 < dim; ++i) {
    a(i, i + 1) = f.one();
    a(i, i + 2) = f.one();
  }
  a(dim - 2, dim - 1) = f.one();
  return a;
}

template <ExactField F>
EvolutionMatrix<F> build_elr(const F& f, const ElrParams<F>& p) {
  detail::require_positive(p.l, "l");
  detail::require_positive(p.n, "n");
  detail::require_positive(p.r, "r");
  detail::require_nonzero_gram(p.gram, p.n);
  if (p.u_coords.size() != p.n) throw Error(ErrorCode::BadShape, "u_coords must have n entries");
  bool any = false;
  for (const auto& c : p.u_coords) any = any || !c.is_zero();
  if (!any) throw Error(ErrorCode::ZeroVectorU, "u must be nonzero");

  const std::size_t l = p.l, n = p.n, r = p.r, dim = l + n + r;
  EvolutionMatrix<F> a(f, dim);
  for (std::size_t i = 0; i + 1 < l; ++i) a(i, i + 1) = f.one();
  for (std::size_t t = 0; t < n; ++t) a(l - 1, l + t) = p.u_coords[t];
  for (std::size_t t = 0; t < n; ++t) a(l + t, l + n) = p.gram[t];
  for (std::size_t i = l + n; i + 1 < dim; ++i) a(i, i + 1) = f.one();
  return a;
}

/// Whether h_{i+1}^2 may involve h_{j+1} in the type [1 x l, n, 1 x r] table.
inline bool ma1_pattern_allows(std::size_t l, std::size_t n, std::size_t r, std::size_t i, std::size_t j) {
  const std::size_t dim = l + n + r;
  if (i >= dim || j >= dim) return false;
  if (i < l) return j > i;
  if (i < l + n) return j >= l + n;
  return j > i;
}

template <ExactField F>
EvolutionMatrix<F> build_ma1(const F& f, const Ma1Params<F>& p) {
  detail::require_positive(p.l, "l");
  detail::require_positive(p.n, "n");
  detail::require_positive(p.r, "r");
  EvolutionMatrix<F> a(f, p.l + p.n + p.r);
  for (const auto& e : p.alpha) {
    if (!ma1_pattern_allows(p.l, p.n, p.r, e.i, e.j)) {
      throw Error(ErrorCode::PatternViolation,
                  "entry (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ") is outside the block pattern");
    }
    a(e.i, e.j) = e.value;
  }
  return a;
}

template <ExactField F>
EvolutionMatrix<F> build_ma2(const F& f, const Ma2Params<F>& p) {
  if (p.c.is_zero()) throw Error(ErrorCode::ZeroC, "c must be nonzero");
  const std::size_t dim = p.l + p.n + p.r;
  Ma1Params<F> q{p.l, p.n, p.r, p.alpha};
  for (const auto& e : p.alpha) {
    if (e.i == p.l) throw Error(ErrorCode::PatternViolation, "row of h_{l+1} is fixed to c h_{l+n+r}");
  }
  q.alpha.push_back({p.l, dim - 1, p.c});
  return build_ma1(f, q);
}

/// The simplest table of the (ma2) shape: consecutive chains everywhere except
/// h_{l+1}^2 = c h_{l+n+r}.
template <ExactField F>
Ma2Params<F> ma2_minimal(const F& f, std::size_t l, std::size_t n, std::size_t r, const Scalar_t<F>& c) {
  Ma2Params<F> p{l, n, r, c, {}};
  for (std::size_t i = 0; i < l; ++i) p.alpha.push_back({i, i + 1, f.one()});
  for (std::size_t t = 1; t < n; ++t) p.alpha.push_back({l + t, l + n, f.one()});
  for (std::size_t i = l + n; i + 1 < l + n + r; ++i) p.alpha.push_back({i, i + 1, f.one()});
  return p;
}

template <ExactField F>
EvolutionMatrix<F> build_ma12(const F& f, const Ma12Params<F>& p) {
  detail::require_positive(p.l, "l");
  detail::require_positive(p.n, "n");
  detail::require_positive(p.r, "r");
  if (p.alpha.size() != p.n) throw Error(ErrorCode::BadShape, "alpha must have n rows");
  for (const auto& row : p.alpha) {
    if (row.size() != p.r) throw Error(ErrorCode::BadShape, "each alpha row must have r entries");
  }
  const std::size_t l = p.l, n = p.n, r = p.r, dim = l + n + r;
  EvolutionMatrix<F> a(f, dim);
  for (std::size_t i = 0; i < l; ++i) {
    a(i, i + 1) = f.one();
    a(i, i + 2) = f.one();
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < r; ++s) a(l + t, l + n + s) = p.alpha[t][s];
  }
  if (r >= 2) {
    for (std::size_t i = l + n; i + 2 < dim; ++i) {
      a(i, i + 1) = f.one();
      a(i, i + 2) = f.one();
    }
    a(dim - 2, dim - 1) = f.one();
  }
  return a;
}

template <ExactField F>
EvolutionMatrix<F> build_eub(const F& f, std::size_t n, const std::vector<Scalar_t<F>>& gram) {
  detail::require_positive(n, "n");
  detail::require_nonzero_gram(gram, n);
  EvolutionMatrix<F> a(f, n + 2);
  for (std::size_t i = 0; i < n; ++i) a(i, n + 1) = gram[i];
  return a;
}

template <ExactField F>
EvolutionMatrix<F> build_chain(const F& f, const ChainParams<F>& p) {
  const std::size_t k = p.dims.size();
  if (k == 0) throw Error(ErrorCode::BadShape, "chain needs at least one level");
  for (auto m : p.dims) detail::require_positive(m, "level dimension");
  if (p.squares.size() != k - 1) throw Error(ErrorCode::BadShape, "squares must have k-1 levels");
  std::vector<std::size_t> offset(k, 0);
  for (std::size_t i = 1; i < k; ++i) offset[i] = offset[i - 1] + p.dims[i - 1];
  const std::size_t dim = offset[k - 1] + p.dims[k - 1];

  EvolutionMatrix<F> a(f, dim);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (p.squares[i].size() != p.dims[i]) {
      throw Error(ErrorCode::BadShape, "level " + std::to_string(i + 1) + " needs " + std::to_string(p.dims[i]) + " squares");
    }
    for (std::size_t q = 0; q < p.dims[i]; ++q) {
      const auto& sq = p.squares[i][q];
      if (sq.size() != p.dims[i + 1]) {
        throw Error(ErrorCode::BadShape, "square vector length must equal m_" + std::to_string(i + 2));
      }
      for (std::size_t s = 0; s < sq.size(); ++s) a(offset[i] + q, offset[i + 1] + s) = sq[s];
    }
  }
  return a;
}

/// Every xi_i(u_ip, u_ip) with i < k is nonzero. This is exactly the condition
/// under which the chain algebra has type [m_k, ..., m_1].
template <ExactField F>
bool chain_squares_nonzero(const ChainParams<F>& p) {
  for (const auto& level : p.squares) {
    for (const auto& sq : level) {
      bool any = false;
      for (const auto& x : sq) any = any || !x.is_zero();
      if (!any) return false;
    }
  }
  return true;
}

/// Every level's squares span the next level.
template <ExactField F>
bool chain_squares_surjective(const F& f, const ChainParams<F>& p) {
  for (std::size_t i = 0; i < p.squares.size(); ++i) {
    auto m = zero_matrix(f, 0, p.dims[i + 1]);
    for (const auto& sq : p.squares[i]) m.append_row(sq);
    if (rank(f, m) != p.dims[i + 1]) return false;
  }
  return true;
}

// Family enumeration over a finite field, in ascending residue order.

namespace detail {

/// Calls visit(values) for every tuple in F_p^len (first position most significant).
template <class Visit>
void for_each_tuple(const PrimeField& f, std::size_t len, bool nonzero_only, Visit&& visit) {
  const std::uint32_t lo = nonzero_only ? 1 : 0;
  std::vector<std::uint32_t> digits(len, lo);
  std::vector<Residue> values(len);
  while (true) {
    for (std::size_t i = 0; i < len; ++i) values[i] = f.element(digits[i]);
    visit(values);
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < f.size()) break;
      digits[pos] = lo;
      if (pos == 0) return;
    }
    if (len == 0) return;
  }
}

}  // namespace detail

inline std::vector<TypeOnesParams<PrimeField>> enumerate_type_ones(const PrimeField& f, std::size_t n, std::size_t k) {
  std::vector<TypeOnesParams<PrimeField>> out;
  detail::for_each_tuple(f, n, true, [&](const std::vector<Residue>& gram) {
    detail::for_each_tuple(f, (k - 1) * n, false, [&](const std::vector<Residue>& mu) {
      TypeOnesParams<PrimeField> p{n, k, gram, {}};
      for (std::size_t j = 0; j + 1 < k; ++j) p.eigen.emplace_back(mu.begin() + j * n, mu.begin() + (j + 1) * n);
      out.push_back(std::move(p));
    });
  });
  return out;
}

inline std::vector<ElrParams<PrimeField>> enumerate_elr(const PrimeField& f, std::size_t l, std::size_t n,
                                                        std::size_t r) {
  std::vector<ElrParams<PrimeField>> out;
  detail::for_each_tuple(f, n, true, [&](const std::vector<Residue>& gram) {
    detail::for_each_tuple(f, n, false, [&](const std::vector<Residue>& c) {
      bool any = false;
      for (const auto& x : c) any = any || !x.is_zero();
      if (any) out.push_back({l, n, r, gram, c});
    });
  });
  return out;
}

inline std::vector<std::vector<Residue>> enumerate_gram(const PrimeField& f, std::size_t n) {
  std::vector<std::vector<Residue>> out;
  detail::for_each_tuple(f, n, true, [&](const std::vector<Residue>& gram) { out.push_back(gram); });
  return out;
}

}  // namespace evokit
