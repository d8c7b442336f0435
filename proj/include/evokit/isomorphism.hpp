#pragma once

/**
 * @file isomorphism.hpp
 * @brief Homomorphism checks, basis-free fingerprints and exhaustive
 *        filtration-constrained isomorphism search over prime fields.
 *
 * Any isomorphism maps ann^m onto ann^m. When both algebras are written in
 * bases where each ann^m is spanned by basis vectors (chain-adapted bases),
 * the image of a basis vector of filtration level L may only involve target
 * basis vectors of level <= L. That zero pattern is the SearchPattern, and
 * iso_search enumerates every matrix with the pattern's Free entries ranging
 * over F_p.
 *
 * A linear map is a matrix whose row i holds the image coordinates of source
 * basis vector i.
 *
 * Enumeration is a depth-first search that assigns one row at a time and
 * rejects a partial assignment as soon as
 *  - the assigned rows are linearly dependent, or
 *  - some product e_i e_j whose factors and support are all assigned fails
 *    phi(e_i e_j) = phi(e_i) phi(e_j).
 * Every rejected subtree is counted in `visited` with its full size, so a
 * completed search reports visited = p^f for f free entries.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "evokit/algebra.hpp"
#include "evokit/series.hpp"

namespace evokit {

template <ExactField F>
using LinearMap = Matrix<Scalar_t<F>>;

/// phi(e_i e_j) = phi(e_i) phi(e_j) for all i <= j.
template <ExactField F>
bool is_homomorphism(const LinearMap<F>& phi, const StructureTensor<F>& src, const StructureTensor<F>& dst) {
  if (!(src.field() == dst.field())) throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
  if (phi.rows() != src.dim() || phi.cols() != dst.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map shape does not match the algebras");
  }
  const F& f = src.field();
  for (std::size_t i = 0; i < src.dim(); ++i) {
    for (std::size_t j = i; j < src.dim(); ++j) {
      auto lhs = apply(f, src.product(i, j), phi);
      auto rhs = multiply(dst, phi.row(i), phi.row(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

template <ExactField F>
bool is_isomorphism(const LinearMap<F>& phi, const StructureTensor<F>& src, const StructureTensor<F>& dst) {
  return src.dim() == dst.dim() && is_invertible(src.field(), phi) && is_homomorphism(phi, src, dst);
}

/// Quantities computed from the multiplication alone; equal for isomorphic algebras.
struct Fingerprint {
  FieldSpec field;
  std::size_t dim = 0;
  bool nilpotent = false;
  std::vector<std::size_t> power_dims;
  std::vector<std::size_t> ann_dims;
  std::vector<std::size_t> type;  // empty when not nilpotent
  std::size_t square_of_square_dim = 0;   // dim E^2 E^2
  std::size_t square_self_ann_dim = 0;    // dim {x in E^2 : x E^2 = 0}

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

template <ExactField F>
Fingerprint fingerprint(const StructureTensor<F>& t) {
  const F& f = t.field();
  const std::size_t n = t.dim();
  Fingerprint fp;
  fp.field = f.spec();
  fp.dim = n;
  auto powers = power_chain(t);
  auto ann = ann_chain(t);
  fp.power_dims = powers.dims();
  fp.ann_dims = ann.dims();
  fp.nilpotent = ann.reaches_whole();
  if (fp.nilpotent) fp.type = type_from_chain(ann).parts;

  auto whole = Subspace<F>::whole(f, n);
  auto e2 = subspace_product(t, whole, whole);
  fp.square_of_square_dim = subspace_product(t, e2, e2).dim();

  // x = sum a_r b_r over the basis b of E^2; x E^2 = 0 is linear in a.
  const std::size_t d = e2.dim();
  auto system = zero_matrix(f, 0, d);
  std::vector<std::vector<std::vector<Scalar_t<F>>>> prods(d, std::vector<std::vector<Scalar_t<F>>>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) prods[r][s] = multiply(t, e2.basis().row(r), e2.basis().row(s));
  }
  std::vector<Scalar_t<F>> row(d, f.zero());
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < d; ++r) row[r] = prods[r][s][k];
      system.append_row(row);
    }
  }
  fp.square_self_ann_dim = d == 0 ? 0 : kernel(f, system).rows();
  return fp;
}

/// Which entries of a candidate map may be nonzero.
class SearchPattern {
 public:
  SearchPattern() = default;
  explicit SearchPattern(std::size_t n) : dim_(n), free_(n * n, false) {}

  static SearchPattern full(std::size_t n) {
    SearchPattern p(n);
    std::fill(p.free_.begin(), p.free_.end(), true);
    return p;
  }

  std::size_t dim() const { return dim_; }
  bool is_free(std::size_t i, std::size_t j) const { return free_[i * dim_ + j]; }
  void set_free(std::size_t i, std::size_t j, bool value) { free_[i * dim_ + j] = value; }
  std::size_t free_count() const { return static_cast<std::size_t>(std::count(free_.begin(), free_.end(), true)); }

  friend bool operator==(const SearchPattern&, const SearchPattern&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<bool> free_;
};

template <ExactField F>
bool is_coordinate_chain(const AnnihilatorChain<F>& chain) {
  return std::all_of(chain.spaces.begin(), chain.spaces.end(), [](const auto& s) { return s.is_coordinate(); });
}

/// level[j] = least m with e_j in ann^m; indices outside the top of the series
/// get level = number of stored terms (one past the last).
template <ExactField F>
std::vector<std::size_t> coordinate_levels(const AnnihilatorChain<F>& chain) {
  if (!is_coordinate_chain(chain)) throw Error(ErrorCode::NonCoordinateChain, "annihilator series is not coordinate");
  const std::size_t n = chain.top().ambient_dim();
  std::vector<std::size_t> level(n, chain.spaces.size());
  for (std::size_t m = chain.spaces.size(); m-- > 1;) {
    for (auto p : chain.spaces[m].pivots()) level[p] = m;
  }
  return level;
}

template <ExactField F>
SearchPattern filtration_pattern(const AnnihilatorChain<F>& src, const AnnihilatorChain<F>& dst) {
  if (src.top().ambient_dim() != dst.top().ambient_dim() || src.dims() != dst.dims()) {
    throw Error(ErrorCode::IncompatibleChains, "annihilator series have different dimension profiles");
  }
  auto src_level = coordinate_levels(src);
  auto dst_level = coordinate_levels(dst);
  const std::size_t n = src_level.size();
  SearchPattern pattern(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pattern.set_free(i, j, dst_level[j] <= src_level[i]);
  }
  return pattern;
}

/// Basis (rows, in old coordinates) in which each ann^m is spanned by a
/// suffix of the basis: vectors outside the series first, ann^1 last.
template <ExactField F>
Matrix<Scalar_t<F>> chain_adapted_basis(const StructureTensor<F>& t, const AnnihilatorChain<F>& chain) {
  const F& f = t.field();
  const std::size_t n = t.dim();
  std::vector<std::vector<std::vector<Scalar_t<F>>>> by_level(chain.spaces.size() + 1);
  Subspace<F> covered = Subspace<F>::zero(f, n);
  auto add = [&](std::span<const Scalar_t<F>> v, std::size_t level) {
    if (covered.contains(v)) return;
    by_level[level].emplace_back(v.begin(), v.end());
    covered = covered + Subspace<F>::span(f, n, {by_level[level].back()});
  };
  for (std::size_t m = 1; m < chain.spaces.size(); ++m) {
    for (std::size_t r = 0; r < chain.spaces[m].dim(); ++r) add(chain.spaces[m].basis().row(r), m);
  }
  for (std::size_t j = 0; j < n; ++j) add(basis_vector(f, n, j), chain.spaces.size());

  auto p = zero_matrix(f, 0, n);
  for (std::size_t m = by_level.size(); m-- > 0;) {
    for (const auto& v : by_level[m]) p.append_row(v);
  }
  return p;
}

template <ExactField F>
Matrix<Scalar_t<F>> chain_adapted_basis(const StructureTensor<F>& t) {
  return chain_adapted_basis(t, ann_chain(t));
}

enum class SearchMode { FirstWitness, CountAll };

struct SearchOptions {
  SearchMode mode = SearchMode::FirstWitness;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 0;            // 0: hardware concurrency
  std::size_t max_stored = 1000;   // CountAll keeps the canonically smallest witnesses
};

template <ExactField F>
struct SearchResult {
  std::uint64_t candidates = 0;  // p^f
  std::uint64_t visited = 0;
  std::uint64_t witness_count = 0;
  std::vector<LinearMap<F>> witnesses;  // ascending canonical order
};

namespace detail {

/// Plain-integer search state shared read-only by all workers.
class IsoKernel {
 public:
  using Row = std::vector<std::uint32_t>;

  IsoKernel(std::uint32_t p, std::size_t n, std::vector<std::uint32_t> src, std::vector<std::uint32_t> dst,
            const SearchPattern& pattern)
      : p_(p), n_(n), src_(std::move(src)), dst_(std::move(dst)) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < n; ++j) {
        if (pattern.is_free(i, j)) cols.push_back(j);
      }
      free_cols_.push_back(std::move(cols));
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        if (!product_zero(dst_, a, b)) dst_pairs_.emplace_back(a, b);
      }
    }
    // Rows with fewer choices first; ties broken by descending index, which
    // puts the targets of products before their factors in adapted bases.
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      if (free_cols_[x].size() != free_cols_[y].size()) return free_cols_[x].size() < free_cols_[y].size();
      return x > y;
    });
    std::vector<std::size_t> position(n);
    for (std::size_t d = 0; d < n; ++d) position[order_[d]] = d;
    checks_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        std::size_t ready = std::max(position[i], position[j]);
        for (std::size_t k = 0; k < n; ++k) {
          if (src_[pair_index(i, j) * n + k] != 0) ready = std::max(ready, position[k]);
        }
        checks_[ready].emplace_back(i, j);
      }
    }
    counts_.resize(n);
    for (std::size_t i = 0; i < n; ++i) counts_[i] = saturating_pow(p, free_cols_[i].size());
    // subtree_[d]: completions of a node at depth d
    subtree_.assign(n, 1);
    for (std::size_t d = n; d-- > 1;) subtree_[d - 1] = saturating_mul(subtree_[d], counts_[order_[d]]);
    total_ = n == 0 ? 1 : saturating_mul(subtree_[0], counts_[order_[0]]);
  }

  static std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
  }
  static std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r = saturating_mul(r, base);
    return r;
  }

  std::uint64_t total() const { return total_; }
  std::size_t dim() const { return n_; }

  struct Outcome {
    std::uint64_t visited = 0;
    std::uint64_t count = 0;
    std::vector<Row> best;  // sorted ascending, at most `keep`
  };

  /// Explores all completions of prefix task `task` over the first `depth` rows.
  void run_task(std::uint64_t task, std::size_t depth, std::size_t keep, Outcome& out) const {
    Worker w(*this, keep, out);
    // decode mixed radix, first row in order most significant
    std::vector<std::uint64_t> digits(depth);
    for (std::size_t d = depth; d-- > 0;) {
      auto c = counts_[order_[d]];
      digits[d] = task % c;
      task /= c;
    }
    for (std::size_t d = 0; d < depth; ++d) {
      if (!w.assign(d, digits[d])) {
        out.visited += depth == 0 ? total_ : subtree_[depth - 1];
        return;
      }
    }
    if (depth == n_) {
      w.accept();
      return;
    }
    w.descend(depth);
  }

  std::uint64_t prefix_tasks(std::size_t depth) const {
    std::uint64_t t = 1;
    for (std::size_t d = 0; d < depth; ++d) t = saturating_mul(t, counts_[order_[d]]);
    return t;
  }

 private:
  bool product_zero(const std::vector<std::uint32_t>& tensor, std::size_t a, std::size_t b) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (tensor[pair_index(a, b) * n_ + k] != 0) return false;
    }
    return true;
  }

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  class Worker {
   public:
    Worker(const IsoKernel& k, std::size_t keep, Outcome& out)
        : k_(k), keep_(keep), out_(out), phi_(k.n_, Row(k.n_, 0)), echelon_(k.n_), pivot_(k.n_, 0),
          lhs_(k.n_), rhs_(k.n_) {}

    /// Sets row order[d] to candidate `index` and runs the checks ready at depth d.
    bool assign(std::size_t d, std::uint64_t index) {
      const std::size_t i = k_.order_[d];
      Row& row = phi_[i];
      std::fill(row.begin(), row.end(), 0);
      const auto& cols = k_.free_cols_[i];
      for (std::size_t c = cols.size(); c-- > 0;) {
        row[cols[c]] = static_cast<std::uint32_t>(index % k_.p_);
        index /= k_.p_;
      }
      return independent(d, row) && checks_pass(d);
    }

    void descend(std::size_t d) {
      const std::size_t i = k_.order_[d];
      const std::uint64_t count = k_.counts_[i];
      for (std::uint64_t c = 0; c < count; ++c) {
        if (!assign(d, c)) {
          out_.visited += k_.subtree_[d];
          continue;
        }
        if (d + 1 == k_.n_) {
          accept();
        } else {
          descend(d + 1);
        }
      }
    }

    void accept() {
      out_.visited += 1;
      out_.count += 1;
      if (keep_ == 0) return;
      Row flat;
      flat.reserve(k_.n_ * k_.n_);
      for (const auto& r : phi_) flat.insert(flat.end(), r.begin(), r.end());
      auto& best = out_.best;
      if (best.size() == keep_ && !(flat < best.back())) return;
      best.insert(std::upper_bound(best.begin(), best.end(), flat), std::move(flat));
      if (best.size() > keep_) best.pop_back();
    }

   private:
    std::uint32_t mulmod(std::uint32_t a, std::uint32_t b) const {
      return static_cast<std::uint32_t>((std::uint64_t{a} * b) % k_.p_);
    }
    std::uint32_t addmod(std::uint32_t a, std::uint32_t b) const {
      std::uint32_t s = a + b;
      return s >= k_.p_ ? s - k_.p_ : s;
    }
    std::uint32_t inv(std::uint32_t a) const {
      std::uint32_t r = 1, base = a, e = k_.p_ - 2;
      while (e) {
        if (e & 1) r = mulmod(r, base);
        base = mulmod(base, base);
        e >>= 1;
      }
      return r;
    }

    // Reduces `row` against echelon rows 0..d-1; stores the reduced row at d.
    bool independent(std::size_t d, const Row& row) {
      Row v = row;
      for (std::size_t e = 0; e < d; ++e) {
        auto c = v[pivot_[e]];
        if (c == 0) continue;
        auto neg = k_.p_ - c;
        for (std::size_t j = 0; j < k_.n_; ++j) v[j] = addmod(v[j], mulmod(neg, echelon_[e][j]));
      }
      std::size_t piv = 0;
      while (piv < k_.n_ && v[piv] == 0) ++piv;
      if (piv == k_.n_) return false;
      auto s = inv(v[piv]);
      for (auto& x : v) x = mulmod(x, s);
      echelon_[d] = std::move(v);
      pivot_[d] = piv;
      return true;
    }

    bool checks_pass(std::size_t d) {
      const std::size_t n = k_.n_;
      for (auto [i, j] : k_.checks_[d]) {
        std::fill(lhs_.begin(), lhs_.end(), 0);
        const std::uint32_t* c = &k_.src_[k_.pair_index(i, j) * n];
        for (std::size_t k = 0; k < n; ++k) {
          if (c[k] == 0) continue;
          for (std::size_t m = 0; m < n; ++m) lhs_[m] = addmod(lhs_[m], mulmod(c[k], phi_[k][m]));
        }
        std::fill(rhs_.begin(), rhs_.end(), 0);
        const Row& x = phi_[i];
        const Row& y = phi_[j];
        for (auto [a, b] : k_.dst_pairs_) {
          std::uint32_t coeff = mulmod(x[a], y[b]);
          if (a != b) coeff = addmod(coeff, mulmod(x[b], y[a]));
          if (coeff == 0) continue;
          const std::uint32_t* e = &k_.dst_[k_.pair_index(a, b) * n];
          for (std::size_t m = 0; m < n; ++m) rhs_[m] = addmod(rhs_[m], mulmod(coeff, e[m]));
        }
        if (lhs_ != rhs_) return false;
      }
      return true;
    }

    const IsoKernel& k_;
    std::size_t keep_;
    Outcome& out_;
    std::vector<Row> phi_;
    std::vector<Row> echelon_;
    std::vector<std::size_t> pivot_;
    Row lhs_, rhs_;
  };

  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::uint32_t> src_, dst_;
  std::vector<std::vector<std::size_t>> free_cols_;
  std::vector<std::pair<std::size_t, std::size_t>> dst_pairs_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> subtree_;
  std::uint64_t total_ = 1;
};

inline std::vector<std::uint32_t> flatten(const StructureTensor<PrimeField>& t) {
  const std::size_t n = t.dim();
  std::vector<std::uint32_t> out;
  out.reserve(n * (n + 1) / 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (const auto& c : t.product(i, j)) out.push_back(c.value());
    }
  }
  return out;
}

}  // namespace detail

/// Enumerates every map with the pattern's Free entries over F_p and returns
/// the invertible homomorphisms. Results do not depend on the thread count:
/// counts are sums and stored witnesses are the canonically smallest ones
/// (row-major, residues ascending), so FirstWitness yields the canonical
/// minimum.
template <ExactField F>
SearchResult<F> iso_search(const StructureTensor<F>& src, const StructureTensor<F>& dst, const SearchPattern& pattern,
                           const SearchOptions& options = {}) {
  if constexpr (!F::finite) {
    throw Error(ErrorCode::InfiniteFieldUnsupported, "exhaustive search needs a finite field");
  } else {
    if (!(src.field() == dst.field())) throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
    const std::size_t n = src.dim();
    if (dst.dim() != n || pattern.dim() != n) throw Error(ErrorCode::DimensionMismatch, "search dimensions differ");
    const PrimeField& f = src.field();

    detail::IsoKernel kernel(f.modulus(), n, detail::flatten(src), detail::flatten(dst), pattern);
    SearchResult<F> result;
    result.candidates = kernel.total();
    if (kernel.total() > options.budget) {
      throw Error(ErrorCode::BudgetExceeded, std::to_string(f.modulus()) + "^" + std::to_string(pattern.free_count()) +
                                                 " candidates exceed the budget of " + std::to_string(options.budget));
    }
    const std::size_t keep = options.mode == SearchMode::FirstWitness ? 1 : options.max_stored;
    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (kernel.total() < 4096) threads = 1;

    std::size_t depth = 0;
    while (depth < n && kernel.prefix_tasks(depth) < 16ULL * threads) ++depth;
    const std::uint64_t tasks = kernel.prefix_tasks(depth);

    std::vector<detail::IsoKernel::Outcome> outcomes(threads);
    std::atomic<std::uint64_t> next{0};
    auto work = [&](unsigned id) {
      for (std::uint64_t t = next++; t < tasks; t = next++) kernel.run_task(t, depth, keep, outcomes[id]);
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    }

    std::vector<detail::IsoKernel::Row> merged;
    for (auto& o : outcomes) {
      result.visited += o.visited;
      result.witness_count += o.count;
      merged.insert(merged.end(), o.best.begin(), o.best.end());
    }
    std::sort(merged.begin(), merged.end());
    if (merged.size() > keep) merged.resize(keep);
    for (const auto& flat : merged) {
      LinearMap<F> phi(n, n, f.zero());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) phi(i, j) = f.element(flat[i * n + j]);
      }
      result.witnesses.push_back(std::move(phi));
    }
    return result;
  }
}

struct IsoOptions {
  SearchOptions search;
  bool rebase = true;         // re-express non-coordinate chains in a chain-adapted basis
  bool full_pattern = false;  // search all of GL(n) instead of the filtration pattern
  bool prefilter = true;      // family reports skip members with a different fingerprint
};

template <ExactField F>
struct IsoReport {
  bool compatible = true;       // false when the annihilator profiles differ
  bool rebased_src = false;
  bool rebased_dst = false;
  std::size_t free_entries = 0;
  SearchResult<F> search;       // witnesses expressed in the input bases

  bool isomorphic() const { return compatible && search.witness_count > 0; }
};

/// Pattern-restricted search between two algebras in arbitrary bases.
/// Witnesses are mapped back to the input bases and re-verified with the
/// generic field arithmetic before being returned.
template <ExactField F>
IsoReport<F> find_isomorphisms(const StructureTensor<F>& src, const StructureTensor<F>& dst,
                               const IsoOptions& options = {}) {
  if (!(src.field() == dst.field())) throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
  if (src.dim() != dst.dim()) return IsoReport<F>{false, false, false, 0, {}};
  const F& f = src.field();
  const std::size_t n = src.dim();
  IsoReport<F> report;

  StructureTensor<F> s = src, d = dst;
  auto p_src = identity_matrix(f, n);
  auto p_dst = identity_matrix(f, n);
  SearchPattern pattern;
  if (options.full_pattern) {
    pattern = SearchPattern::full(n);
  } else {
    auto cs = ann_chain(src);
    auto cd = ann_chain(dst);
    if (cs.dims() != cd.dims()) {
      report.compatible = false;
      return report;
    }
    if (!is_coordinate_chain(cs)) {
      if (!options.rebase) throw Error(ErrorCode::NonCoordinateChain, "source annihilator series is not coordinate");
      p_src = chain_adapted_basis(src, cs);
      s = change_basis(src, p_src);
      cs = ann_chain(s);
      report.rebased_src = true;
    }
    if (!is_coordinate_chain(cd)) {
      if (!options.rebase) throw Error(ErrorCode::NonCoordinateChain, "target annihilator series is not coordinate");
      p_dst = chain_adapted_basis(dst, cd);
      d = change_basis(dst, p_dst);
      cd = ann_chain(d);
      report.rebased_dst = true;
    }
    pattern = filtration_pattern(cs, cd);
  }
  report.free_entries = pattern.free_count();
  report.search = iso_search(s, d, pattern, options.search);

  // phi(e) = P_src^{-1} phi'(f) P_dst
  auto p_src_inv = inverse(f, p_src);
  for (auto& phi : report.search.witnesses) {
    phi = multiply(f, multiply(f, p_src_inv, phi), p_dst);
    if (!is_isomorphism(phi, src, dst)) throw std::logic_error("search returned a map that is not an isomorphism");
  }
  if (report.search.witness_count > 0 && !(fingerprint(src) == fingerprint(dst))) {
    throw std::logic_error("isomorphic algebras with different fingerprints");
  }
  return report;
}

struct FamilyEntry {
  std::string label;
  bool fingerprint_match = false;
  bool searched = false;
  std::uint64_t visited = 0;
  std::uint64_t witness_count = 0;
};

template <ExactField F>
struct FamilyReport {
  std::vector<FamilyEntry> entries;
  std::vector<std::pair<std::string, LinearMap<F>>> witnesses;  // first witness per isomorphic member

  bool none_isomorphic() const {
    return std::all_of(entries.begin(), entries.end(), [](const FamilyEntry& e) { return e.witness_count == 0; });
  }
  std::string verdict() const { return none_isomorphic() ? "NONE_ISOMORPHIC" : "SOME_ISOMORPHIC"; }
};

template <ExactField F>
struct FamilyMember {
  std::string label;
  StructureTensor<F> tensor;
};

/// Searches `src` against every member. Members whose fingerprint differs are
/// skipped: they cannot be isomorphic.
template <ExactField F>
FamilyReport<F> family_noniso_report(const StructureTensor<F>& src, const std::vector<FamilyMember<F>>& family,
                                     const IsoOptions& options = {}) {
  FamilyReport<F> report;
  const auto src_fp = fingerprint(src);
  for (const auto& member : family) {
    FamilyEntry entry{member.label};
    entry.fingerprint_match = fingerprint(member.tensor) == src_fp;
    if (entry.fingerprint_match || !options.prefilter) {
      auto iso = find_isomorphisms(src, member.tensor, options);
      entry.searched = true;
      entry.visited = iso.search.visited;
      entry.witness_count = iso.search.witness_count;
      if (!iso.search.witnesses.empty()) report.witnesses.emplace_back(member.label, iso.search.witnesses.front());
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace evokit
