#pragma once

// Reproducible experiments over the constructions. Each check returns a
// verdict instead of throwing, so a suite can report every criterion.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evokit/constructions.hpp"
#include "evokit/graph.hpp"
#include "evokit/isomorphism.hpp"
#include "evokit/random.hpp"
#include "evokit/series.hpp"

namespace evokit {

enum class Verdict { Pass, Fail, Skipped };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckResult {
  int id = 0;
  std::string name;
  Verdict verdict = Verdict::Fail;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct CheckOptions {
  std::uint64_t budget = 100'000'000;
  unsigned threads = 0;
  std::uint64_t seed = 20240601;
};

/// Builder used by the type grid; replaceable to confirm the check can fail.
using TypeOnesBuilder = std::function<EvolutionMatrix<PrimeField>(const PrimeField&, const TypeOnesParams<PrimeField>&)>;
using TypeOnesBuilderQ = std::function<EvolutionMatrix<Rationals>(const Rationals&, const TypeOnesParams<Rationals>&)>;

namespace detail {

template <class Body>
CheckResult timed_check(int id, std::string name, double limit, Body&& body) {
  CheckResult r{id, std::move(name), Verdict::Fail, {}, 0, limit};
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) {
      r.verdict = Verdict::Skipped;
    } else {
      r.verdict = Verdict::Fail;
    }
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::Fail;
    r.detail = std::string("unexpected error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.verdict == Verdict::Pass && r.seconds > limit) {
    r.verdict = Verdict::Fail;
    r.detail += "; exceeded time limit";
  }
  return r;
}

inline std::vector<std::size_t> ones_then(std::size_t ones, std::size_t last) {
  std::vector<std::size_t> v(ones, 1);
  v.push_back(last);
  return v;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

template <ExactField F>
TypeOnesParams<F> random_type_ones(const F& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  TypeOnesParams<F> p{n, k, {}, {}};
  for (std::size_t i = 0; i < n; ++i) p.gram.push_back(random_nonzero(f, rng));
  for (std::size_t j = 0; j + 1 < k; ++j) {
    std::vector<Scalar_t<F>> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(random_nonzero(f, rng));
    p.eigen.push_back(std::move(row));
  }
  return p;
}

/// Nonincreasing tuples of positive integers with sum at most `max_sum`.
inline void partitions_up_to(std::size_t max_sum, std::vector<std::vector<std::size_t>>& out) {
  std::function<void(std::vector<std::size_t>&, std::size_t, std::size_t)> rec =
      [&](std::vector<std::size_t>& cur, std::size_t left, std::size_t cap) {
        if (!cur.empty()) out.push_back(cur);
        for (std::size_t m = std::min(left, cap); m >= 1; --m) {
          cur.push_back(m);
          rec(cur, left - m, m);
          cur.pop_back();
        }
      };
  std::vector<std::size_t> cur;
  rec(cur, max_sum, max_sum);
}

/// Random chain data with every square nonzero and every level spanned.
template <ExactField F>
ChainParams<F> random_chain(const F& f, const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
  while (true) {
    ChainParams<F> p{dims, {}};
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
      std::vector<std::vector<Scalar_t<F>>> level;
      for (std::size_t q = 0; q < dims[i]; ++q) level.push_back(random_vector(f, dims[i + 1], rng));
      p.squares.push_back(std::move(level));
    }
    if (chain_squares_nonzero(p) && chain_squares_surjective(f, p)) return p;
  }
}

/// Isomorphism test by plain enumeration of GL(3, F_3), sharing no code with
/// the pattern search. Tensors are flattened as c[(i*3+j)*3+k] for all i, j.
class Gl3Oracle {
 public:
  static constexpr int p = 3;
  static constexpr int n = 3;
  using Flat = std::array<int, 27>;

  static Flat flatten(const StructureTensor<PrimeField>& t) {
    Flat c{};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) c[(i * n + j) * n + k] = static_cast<int>(t.coefficient(i, j, k).value());
      }
    }
    return c;
  }

  /// Whether some invertible phi (rows = images of basis vectors) is multiplicative.
  static bool isomorphic(const Flat& src, const Flat& dst) {
    // Vectors of F_3^3 are coded as a + 3b + 9c.
    std::array<std::array<int, 27>, 27> prod{};
    std::array<std::array<int, 3>, 27> digits{};
    for (int v = 0; v < 27; ++v) digits[v] = {v % 3, (v / 3) % 3, v / 9};
    auto encode = [](std::array<int, 3> d) { return (d[0] % p) + 3 * (d[1] % p) + 9 * (d[2] % p); };
    for (int v = 0; v < 27; ++v) {
      for (int w = 0; w < 27; ++w) {
        std::array<int, 3> out{0, 0, 0};
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            const int s = digits[v][i] * digits[w][j];
            if (s == 0) continue;
            for (int k = 0; k < n; ++k) out[k] += s * dst[(i * n + j) * n + k];
          }
        }
        prod[v][w] = encode(out);
      }
    }
    std::array<int, 3> phi{};
    for (phi[0] = 1; phi[0] < 27; ++phi[0]) {
      for (phi[1] = 1; phi[1] < 27; ++phi[1]) {
        for (phi[2] = 1; phi[2] < 27; ++phi[2]) {
          if (!invertible(digits, phi)) continue;
          bool ok = true;
          for (int i = 0; i < n && ok; ++i) {
            for (int j = i; j < n && ok; ++j) {
              std::array<int, 3> image{0, 0, 0};
              for (int k = 0; k < n; ++k) {
                const int c = src[(i * n + j) * n + k];
                for (int t = 0; t < n; ++t) image[t] += c * digits[phi[k]][t];
              }
              ok = encode(image) == prod[phi[i]][phi[j]];
            }
          }
          if (ok) return true;
        }
      }
    }
    return false;
  }

 private:
  static bool invertible(const std::array<std::array<int, 3>, 27>& d, const std::array<int, 3>& phi) {
    const auto& a = d[phi[0]];
    const auto& b = d[phi[1]];
    const auto& c = d[phi[2]];
    const int det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                    a[2] * (b[0] * c[1] - b[1] * c[0]);
    return ((det % p) + p) % p != 0;
  }
};

}  // namespace detail

inline CheckResult check_type_ones_grid(const CheckOptions& opt = {}, TypeOnesBuilder build_f = {},
                                        TypeOnesBuilderQ build_q = {}) {
  if (!build_f) build_f = [](const PrimeField& f, const TypeOnesParams<PrimeField>& p) { return build_type_ones(f, p); };
  if (!build_q) build_q = [](const Rationals& f, const TypeOnesParams<Rationals>& p) { return build_type_ones(f, p); };
  return detail::timed_check(1, "type_ones type grid", 10.0, [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 1);
    const PrimeField f3(3);
    const Rationals q;
    std::size_t cases = 0, bad = 0;
    std::string first_bad;
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t k = 1; k <= 6; ++k) {
        const auto expected = detail::ones_then(k, n);
        auto got_f = type_signature(evolution_to_tensor(build_f(f3, detail::random_type_ones(f3, n, k, rng))));
        auto got_q = type_signature(evolution_to_tensor(build_q(q, detail::random_type_ones(q, n, k, rng))));
        for (const auto* got : {&got_f, &got_q}) {
          ++cases;
          if (got->parts != expected) {
            ++bad;
            if (first_bad.empty()) {
              first_bad = "; first mismatch n=" + std::to_string(n) + " k=" + std::to_string(k) + " got " +
                          detail::join(got->parts);
            }
          }
        }
      }
    }
    r.verdict = bad == 0 ? Verdict::Pass : Verdict::Fail;
    r.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) + " types equal [1 x k, n]" + first_bad;
  });
}

inline CheckResult check_elr_grid(const CheckOptions& opt = {}) {
  return detail::timed_check(2, "E_lr type grid", 10.0, [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 2);
    const PrimeField f3(3);
    const Rationals q;
    std::size_t cases = 0, bad = 0;
    auto expected_parts = [](std::size_t l, std::size_t n, std::size_t rr) {
      std::vector<std::size_t> v(rr, 1);
      v.push_back(n);
      v.insert(v.end(), l, 1);
      return v;
    };
    for (std::size_t l = 1; l <= 4; ++l) {
      for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t rr = 1; rr <= 4; ++rr) {
          const auto expected = expected_parts(l, n, rr);
          ElrParams<PrimeField> pf{l, n, rr, {}, {}};
          ElrParams<Rationals> pq{l, n, rr, {}, {}};
          for (std::size_t t = 0; t < n; ++t) {
            pf.gram.push_back(random_nonzero(f3, rng));
            pq.gram.push_back(random_nonzero(q, rng));
          }
          pf.u_coords = random_vector(f3, n, rng);
          pq.u_coords = random_vector(q, n, rng);
          pf.u_coords[rng() % n] = random_nonzero(f3, rng);
          pq.u_coords[rng() % n] = random_nonzero(q, rng);
          cases += 2;
          if (type_signature(evolution_to_tensor(build_elr(f3, pf))).parts != expected) ++bad;
          if (type_signature(evolution_to_tensor(build_elr(q, pq))).parts != expected) ++bad;
        }
      }
    }
    r.verdict = bad == 0 ? Verdict::Pass : Verdict::Fail;
    r.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) +
               " types have n_{r+1} = n and all other parts 1";
  });
}

inline CheckResult check_eub_and_chain(const CheckOptions& opt = {}) {
  return detail::timed_check(3, "E(U,b) and chain types", 30.0, [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 3);
    const PrimeField f3(3);
    const Rationals q;
    std::size_t cases = 0, bad = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<Residue> gf;
      std::vector<Rational> gq;
      for (std::size_t i = 0; i < n; ++i) {
        gf.push_back(random_nonzero(f3, rng));
        gq.push_back(random_nonzero(q, rng));
      }
      const std::vector<std::size_t> expected{2, n};
      cases += 2;
      if (type_signature(evolution_to_tensor(build_eub(f3, n, gf))).parts != expected) ++bad;
      if (type_signature(evolution_to_tensor(build_eub(q, n, gq))).parts != expected) ++bad;
    }
    std::vector<std::vector<std::size_t>> tuples;
    detail::partitions_up_to(8, tuples);
    for (const auto& m : tuples) {
      const std::vector<std::size_t> expected(m.rbegin(), m.rend());
      for (int rep = 0; rep < 3; ++rep) {
        cases += 2;
        if (type_signature(evolution_to_tensor(build_chain(f3, detail::random_chain(f3, m, rng)))).parts != expected) ++bad;
        if (type_signature(evolution_to_tensor(build_chain(q, detail::random_chain(q, m, rng)))).parts != expected) ++bad;
      }
    }
    r.verdict = bad == 0 ? Verdict::Pass : Verdict::Fail;
    r.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) + " types match over " +
               std::to_string(tuples.size()) + " spanning chain shapes";
  });
}

inline CheckResult check_nilpotency_agreement(const CheckOptions& opt = {}) {
  return detail::timed_check(4, "nilpotency criteria agreement", 60.0, [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 4);
    const PrimeField f5(5);
    std::size_t disagree = 0, nilpotent_cyclic = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = 1 + rng() % 7;
      std::bernoulli_distribution dens(0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
      EvolutionMatrix<PrimeField> a(f5, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (dens(rng)) a(i, j) = random_nonzero(f5, rng);
        }
      }
      a = permute_basis(a, rng);
      auto t = evolution_to_tensor(a);
      auto ann = ann_chain(t);
      auto powers = power_chain(t);
      if (!ann.reaches_whole() || !powers.reaches_zero() || !triangular_witness(a)) ++disagree;
    }
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = 1 + rng() % 7;
      auto a = random_evolution(f5, n, rng);
      a(rng() % n, rng() % n) = f5.zero();
      const std::size_t i = rng() % n;
      a(i, i) = random_nonzero(f5, rng);
      auto t = evolution_to_tensor(a);
      const bool by_ann = ann_chain(t).reaches_whole();
      const bool by_powers = power_chain(t).reaches_zero();
      if (by_ann != by_powers || triangular_witness(a).has_value() != by_ann) ++disagree;
      if (by_ann) ++nilpotent_cyclic;
    }
    r.verdict = disagree == 0 ? Verdict::Pass : Verdict::Fail;
    r.detail = std::to_string(disagree) + " disagreements over 2000 algebras (" + std::to_string(nilpotent_cyclic) +
               " cyclic ones reported nilpotent)";
  });
}

inline CheckResult check_bnk_family(const CheckOptions& opt = {}) {
  return detail::timed_check(5, "B(n,k) vs type_ones family", 300.0, [&](CheckResult& r) {
    const PrimeField f3(3);
    auto src = evolution_to_tensor(build_bnk(f3, 1, 4));
    if (type_signature(src).parts != std::vector<std::size_t>(5, 1)) {
      r.detail = "B(1,4) does not have type [1,1,1,1,1]";
      return;
    }
    std::vector<FamilyMember<PrimeField>> family;
    for (const auto& p : enumerate_type_ones(f3, 1, 4)) {
      family.push_back({"type_ones" + to_json(p).dump(), evolution_to_tensor(build_type_ones(f3, p))});
    }
    IsoOptions iso;
    iso.search = {SearchMode::CountAll, opt.budget, opt.threads, 1};
    iso.prefilter = false;
    auto report = family_noniso_report(src, family, iso);
    std::size_t searched = 0;
    for (const auto& e : report.entries) searched += e.searched ? 1 : 0;
    auto self = find_isomorphisms(src, src, iso);
    const bool identity_found =
        !self.search.witnesses.empty() && self.search.witnesses.front() == identity_matrix(f3, src.dim());
    r.verdict = family.size() == 54 && searched == 54 && report.none_isomorphic() && self.search.witness_count >= 1 &&
                        identity_found
                    ? Verdict::Pass
                    : Verdict::Fail;
    r.detail = report.verdict() + " over " + std::to_string(searched) + "/" + std::to_string(family.size()) +
               " members; self-search " + std::to_string(self.search.witness_count) + " witnesses" +
               (identity_found ? " (identity first)" : "");
  });
}

inline CheckResult check_elr_families(const CheckOptions& opt = {}) {
  return detail::timed_check(6, "ma2 / ma12 vs E_lr families", 600.0, [&](CheckResult& r) {
    const PrimeField f3(3);
    IsoOptions iso;
    iso.search = {SearchMode::CountAll, opt.budget, opt.threads, 1};
    iso.prefilter = false;
    auto family_of = [&](std::size_t l, std::size_t n, std::size_t rr) {
      std::vector<FamilyMember<PrimeField>> family;
      for (const auto& p : enumerate_elr(f3, l, n, rr)) {
        family.push_back({"elr" + to_json(p).dump(), evolution_to_tensor(build_elr(f3, p))});
      }
      return family;
    };
    auto counted = [](const FamilyReport<PrimeField>& rep) {
      std::uint64_t w = 0;
      for (const auto& e : rep.entries) w += e.witness_count;
      return w;
    };
    std::uint64_t witnesses = 0;
    std::ostringstream detail;

    // r >= 2 branch. The ma2 table has a different type from every member, so
    // the filtration search is vacuous; a full GL(4) search backs it up.
    const auto fam112 = family_of(1, 1, 2);
    IsoOptions full = iso;
    full.full_pattern = true;
    for (long c = 1; c <= 2; ++c) {
      auto src = evolution_to_tensor(build_ma2(f3, ma2_minimal(f3, 1, 1, 2, f3.from_int(c))));
      auto rep = family_noniso_report(src, fam112, iso);
      auto rep_full = family_noniso_report(src, fam112, full);
      witnesses += counted(rep) + counted(rep_full);
      detail << "ma2(c=" << c << "): " << rep_full.verdict() << " over " << fam112.size() << " (full GL); ";
    }

    // l >= 2 branch.
    Ma12Params<PrimeField> p12{2, 1, 2, {{f3.one(), f3.zero()}}};
    auto src12 = evolution_to_tensor(build_ma12(f3, p12));
    const auto fam212 = family_of(2, 1, 2);
    auto rep12 = family_noniso_report(src12, fam212, iso);
    witnesses += counted(rep12);
    std::size_t compatible = 0;
    for (const auto& e : rep12.entries) compatible += e.fingerprint_match ? 1 : 0;
    auto self = find_isomorphisms(src12, src12, iso);
    detail << "ma12: " << rep12.verdict() << " over " << fam212.size() << " (" << compatible
           << " with equal fingerprint); ma12 self-search " << self.search.witness_count << " witnesses";

    r.verdict = witnesses == 0 && self.search.witness_count > 0 ? Verdict::Pass : Verdict::Fail;
    r.detail = detail.str();
  });
}

inline CheckResult check_pattern_completeness(const CheckOptions& opt = {}) {
  return detail::timed_check(7, "pattern restriction loses no isomorphism", 300.0, [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 7);
    const PrimeField f3(3);
    std::vector<StructureTensor<PrimeField>> algebras;
    for (int i = 0; i < 25; ++i) {
      auto a = permute_basis(random_upper_triangular(f3, 3, rng, 0.3 + 0.1 * (i % 6)), rng);
      algebras.push_back(evolution_to_tensor(a));
    }
    for (int i = 0; i < 25; ++i) algebras.push_back(change_basis(algebras[i], random_invertible(f3, 3, rng)));

    std::vector<detail::Gl3Oracle::Flat> flat;
    for (const auto& t : algebras) flat.push_back(detail::Gl3Oracle::flatten(t));
    IsoOptions iso;
    iso.search = {SearchMode::FirstWitness, opt.budget, 1, 1};
    std::size_t pairs = 0, disagree = 0, positive = 0;
    for (std::size_t i = 0; i < algebras.size(); ++i) {
      for (std::size_t j = i + 1; j < algebras.size(); ++j) {
        ++pairs;
        const bool oracle = detail::Gl3Oracle::isomorphic(flat[i], flat[j]);
        const bool pattern = find_isomorphisms(algebras[i], algebras[j], iso).isomorphic();
        if (oracle != pattern) ++disagree;
        if (oracle) ++positive;
      }
    }
    r.verdict = disagree == 0 ? Verdict::Pass : Verdict::Fail;
    r.detail = std::to_string(disagree) + " disagreements over " + std::to_string(pairs) + " pairs (" +
               std::to_string(positive) + " isomorphic)";
  });
}

inline std::vector<StructureTensor<PrimeField>> constructed_algebras(const PrimeField& f) {
  std::vector<EvolutionMatrix<PrimeField>> m;
  auto g = [&](std::initializer_list<long long> v) {
    std::vector<Residue> out;
    for (auto x : v) out.push_back(f.from_int(x));
    return out;
  };
  m.push_back(build_bnk(f, 1, 4));
  m.push_back(build_bnk(f, 2, 3));
  m.push_back(build_type_ones(f, TypeOnesParams<PrimeField>{1, 3, g({2}), {g({1}), g({3})}}));
  m.push_back(build_type_ones(f, TypeOnesParams<PrimeField>{2, 2, g({1, 4}), {g({2, 0})}}));
  m.push_back(build_type_ones(f, TypeOnesParams<PrimeField>{3, 1, g({1, 2, 3}), {}}));
  m.push_back(build_elr(f, ElrParams<PrimeField>{1, 1, 1, g({1}), g({1})}));
  m.push_back(build_elr(f, ElrParams<PrimeField>{1, 2, 2, g({1, 3}), g({1, 1})}));
  m.push_back(build_elr(f, ElrParams<PrimeField>{2, 2, 1, g({2, 2}), g({0, 4})}));
  m.push_back(build_elr(f, ElrParams<PrimeField>{3, 1, 2, g({4}), g({3})}));
  m.push_back(build_eub(f, 1, g({1})));
  m.push_back(build_eub(f, 2, g({1, 2})));
  m.push_back(build_eub(f, 3, g({1, 1, 4})));
  m.push_back(build_ma2(f, ma2_minimal(f, 1, 1, 2, f.one())));
  m.push_back(build_ma2(f, ma2_minimal(f, 2, 2, 2, f.from_int(3))));
  m.push_back(build_ma12(f, Ma12Params<PrimeField>{2, 1, 2, {g({1, 0})}}));
  m.push_back(build_ma12(f, Ma12Params<PrimeField>{2, 2, 3, {g({1, 2, 0}), g({0, 1, 1})}}));
  m.push_back(build_chain(f, ChainParams<PrimeField>{{2, 1}, {{g({1}), g({2})}}}));
  m.push_back(build_chain(f, ChainParams<PrimeField>{{3, 2, 1}, {{g({1, 0}), g({0, 1}), g({1, 1})}, {g({1}), g({3})}}}));
  m.push_back(build_chain(f, ChainParams<PrimeField>{{2, 2}, {{g({1, 2}), g({4, 0})}}}));
  m.push_back(build_ma1(f, Ma1Params<PrimeField>{1, 2, 1, {{0, 1, f.one()}, {0, 2, f.from_int(2)}, {1, 3, f.one()}}}));
  std::vector<StructureTensor<PrimeField>> out;
  for (const auto& a : m) out.push_back(evolution_to_tensor(a));
  return out;
}

inline CheckResult check_basis_invariance(const CheckOptions& opt = {}) {
  return detail::timed_check(8, "fingerprint and type basis invariance", 60.0, [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 8);
    const PrimeField f5(5);
    const auto algebras = constructed_algebras(f5);
    std::size_t changed = 0, trials = 0;
    for (const auto& t : algebras) {
      const auto fp = fingerprint(t);
      const auto type = type_signature(t);
      for (int k = 0; k < 200; ++k) {
        ++trials;
        auto moved = change_basis(t, random_invertible(f5, t.dim(), rng));
        if (!(fingerprint(moved) == fp) || !(type_signature(moved) == type)) ++changed;
      }
    }
    r.verdict = changed == 0 && algebras.size() == 20 ? Verdict::Pass : Verdict::Fail;
    r.detail = std::to_string(changed) + " changes over " + std::to_string(trials) + " basis changes of " +
               std::to_string(algebras.size()) + " algebras";
  });
}

inline std::vector<CheckResult> run_all_checks(const CheckOptions& opt = {},
                                               const std::function<void(const CheckResult&)>& on_result = {}) {
  std::vector<std::function<CheckResult()>> checks{
      [&] { return check_type_ones_grid(opt); },   [&] { return check_elr_grid(opt); },
      [&] { return check_eub_and_chain(opt); },    [&] { return check_nilpotency_agreement(opt); },
      [&] { return check_bnk_family(opt); },       [&] { return check_elr_families(opt); },
      [&] { return check_pattern_completeness(opt); }, [&] { return check_basis_invariance(opt); }};
  std::vector<CheckResult> out;
  for (auto& c : checks) {
    out.push_back(c());
    if (on_result) on_result(out.back());
  }
  return out;
}

inline std::string format_result(const CheckResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "[" << to_string(r.verdict) << "] " << r.id << ". " << r.name << " (" << r.seconds << "s / " << r.limit_seconds
     << "s): " << r.detail;
  return os.str();
}

}  // namespace evokit
