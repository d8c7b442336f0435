#include <gtest/gtest.h>

#include <random>

#include "evokit/evokit.hpp"
#include "test_support.hpp"

using namespace evokit;
using evokit::testing::residues;

namespace {

StructureTensor<PrimeField> square_chain(const PrimeField& f, long c) {
  EvolutionMatrix<PrimeField> a(f, 2);
  a(0, 1) = f.from_int(c);
  return evolution_to_tensor(a);
}

// All 2x2 matrices over F_3 with nonzero determinant that are multiplicative.
std::size_t brute_gl2_count(const StructureTensor<PrimeField>& s, const StructureTensor<PrimeField>& d) {
  const PrimeField& f = s.field();
  std::size_t invertible = 0, count = 0;
  for (int code = 0; code < 81; ++code) {
    LinearMap<PrimeField> phi(2, 2, f.zero());
    for (int k = 0, c = code; k < 4; ++k, c /= 3) phi(k / 2, k % 2) = f.element(static_cast<std::uint32_t>(c % 3));
    if ((phi(0, 0) * phi(1, 1) - phi(0, 1) * phi(1, 0)).is_zero()) continue;
    ++invertible;
    if (is_homomorphism(phi, s, d)) ++count;
  }
  EXPECT_EQ(invertible, 48u);
  return count;
}

SearchOptions count_all(unsigned threads = 1) { return {SearchMode::CountAll, 100'000'000, threads, 1000}; }

std::uint64_t power(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= p;
  return r;
}

}  // namespace

TEST(Homomorphism, Examples) {
  PrimeField f(3);
  auto s = square_chain(f, 1), d = square_chain(f, 2);
  EXPECT_TRUE(is_homomorphism(identity_matrix(f, 2), s, s));
  auto phi = zero_matrix(f, 2, 2);
  phi(0, 0) = f.one();
  phi(1, 1) = f.from_int(2);
  EXPECT_TRUE(is_isomorphism(phi, s, d));
  EXPECT_TRUE(is_homomorphism(zero_matrix(f, 2, 2), s, d));
  EXPECT_FALSE(is_isomorphism(zero_matrix(f, 2, 2), s, d));
  EXPECT_THROW(is_homomorphism(zero_matrix(f, 3, 3), s, d), Error);
}

TEST(Fingerprint, ZeroAlgebra) {
  PrimeField f(3);
  auto fp = fingerprint(StructureTensor<PrimeField>(f, 3));
  EXPECT_EQ(fp.power_dims, (std::vector<std::size_t>{3, 0}));
  EXPECT_EQ(fp.ann_dims, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(fp.type, (std::vector<std::size_t>{3}));
}

TEST(Fingerprint, Eub) {
  PrimeField f(5);
  auto t = evolution_to_tensor(build_eub(f, 2, residues(f, {1, 2})));
  auto fp = fingerprint(t);
  EXPECT_EQ(fp.type, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(fp.square_of_square_dim, 0u);
  EXPECT_EQ(fp.square_self_ann_dim, 1u);
}

TEST(Fingerprint, InvariantUnderBasisChange) {
  std::mt19937_64 rng(61);
  PrimeField f(5);
  auto t = evolution_to_tensor(build_eub(f, 2, residues(f, {1, 2})));
  const auto fp = fingerprint(t);
  for (int i = 0; i < 200; ++i) {
    auto moved = change_basis(t, random_invertible(f, 4, rng));
    EXPECT_EQ(fingerprint(moved), fp);
    EXPECT_EQ(type_signature(moved).parts, (std::vector<std::size_t>{2, 2}));
  }
}

TEST(FiltrationPattern, AllOnesTypeIsUpperTriangular) {
  PrimeField f(3);
  auto c = ann_chain(evolution_to_tensor(build_bnk(f, 1, 4)));
  auto pattern = filtration_pattern(c, c);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(pattern.is_free(i, j), j >= i) << i << "," << j;
  }
  EXPECT_EQ(pattern.free_count(), 15u);
}

TEST(FiltrationPattern, DifferentProfiles) {
  Rationals q;
  auto a = evolution_to_tensor(build_type_ones(q, TypeOnesParams<Rationals>{2, 2, {1, 1}, {{2, 3}}}));
  auto b = evolution_to_tensor(build_chain(q, ChainParams<Rationals>{{1, 1, 2}, {{{1}}, {{1, 0}}}}));
  ASSERT_EQ(type_signature(a).parts, (std::vector<std::size_t>{1, 1, 2}));
  ASSERT_EQ(type_signature(b).parts, (std::vector<std::size_t>{2, 1, 1}));
  try {
    filtration_pattern(ann_chain(a), ann_chain(b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleChains);
  }
}

TEST(FiltrationPattern, ElrMiddleBlock) {
  PrimeField f(5);
  const std::size_t l = 2, n = 2, r = 2;
  auto c = ann_chain(evolution_to_tensor(build_elr(f, ElrParams<PrimeField>{l, n, r, residues(f, {1, 2}), residues(f, {1, 1})})));
  auto pattern = filtration_pattern(c, c);
  for (std::size_t i = l; i < l + n; ++i) {
    for (std::size_t j = 0; j < l + n + r; ++j) EXPECT_EQ(pattern.is_free(i, j), j >= l);
  }
}

TEST(FiltrationPattern, NonCoordinateChain) {
  std::mt19937_64 rng(62);
  PrimeField f(3);
  auto t = evolution_to_tensor(build_bnk(f, 1, 3));
  StructureTensor<PrimeField> moved = t;
  do moved = change_basis(t, random_invertible(f, 4, rng));
  while (is_coordinate_chain(ann_chain(moved)));
  try {
    filtration_pattern(ann_chain(moved), ann_chain(t));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonCoordinateChain);
  }
  IsoOptions opt;
  opt.rebase = false;
  EXPECT_THROW(find_isomorphisms(moved, t, opt), Error);
  EXPECT_TRUE(find_isomorphisms(moved, t).isomorphic());
}

TEST(ChainAdaptedBasis, MakesChainCoordinate) {
  std::mt19937_64 rng(63);
  PrimeField f(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto t = change_basis(evolution_to_tensor(random_upper_triangular(f, n, rng)), random_invertible(f, n, rng));
    auto p = chain_adapted_basis(t);
    ASSERT_TRUE(is_invertible(f, p));
    auto chain = ann_chain(change_basis(t, p));
    EXPECT_TRUE(is_coordinate_chain(chain));
    auto levels = coordinate_levels(chain);
    for (std::size_t j = 1; j < levels.size(); ++j) EXPECT_GE(levels[j - 1], levels[j]);
  }
}

TEST(IsoSearch, IdentityAmongSelfWitnesses) {
  PrimeField f(3);
  auto t = evolution_to_tensor(build_eub(f, 1, residues(f, {1})));
  auto rep = find_isomorphisms(t, t, {count_all()});
  ASSERT_FALSE(rep.search.witnesses.empty());
  bool identity = false;
  for (const auto& w : rep.search.witnesses) identity = identity || w == identity_matrix(f, 3);
  EXPECT_TRUE(identity);
}

TEST(IsoSearch, MatchesGl2BruteForce) {
  PrimeField f(3);
  for (long a = 0; a < 3; ++a) {
    for (long b = 0; b < 3; ++b) {
      auto s = square_chain(f, a), d = square_chain(f, b);
      const auto expected = brute_gl2_count(s, d);
      auto res = iso_search(s, d, SearchPattern::full(2), count_all());
      EXPECT_EQ(res.witness_count, expected) << a << " vs " << b;
      EXPECT_EQ(res.visited, 81u);
      for (const auto& w : res.witnesses) EXPECT_TRUE(is_isomorphism(w, s, d));
    }
  }
  EXPECT_GT(brute_gl2_count(square_chain(f, 1), square_chain(f, 2)), 0u);
}

TEST(IsoSearch, FirstWitnessIsCanonicalMinimum) {
  PrimeField f(3);
  auto t = evolution_to_tensor(build_bnk(f, 1, 3));
  auto all = find_isomorphisms(t, t, {count_all()});
  IsoOptions first;
  first.search.mode = SearchMode::FirstWitness;
  auto one = find_isomorphisms(t, t, first);
  ASSERT_EQ(one.search.witnesses.size(), 1u);
  EXPECT_EQ(one.search.witnesses.front(), all.search.witnesses.front());
  EXPECT_EQ(one.search.witness_count, all.search.witness_count);
}

TEST(IsoSearch, VisitedEqualsSearchSpace) {
  std::mt19937_64 rng(64);
  PrimeField f(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto s = evolution_to_tensor(random_upper_triangular(f, n, rng));
    auto d = evolution_to_tensor(random_upper_triangular(f, n, rng));
    SearchPattern pattern(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) pattern.set_free(i, j, rng() % 3 != 0);
    }
    auto res = iso_search(s, d, pattern, count_all());
    EXPECT_EQ(res.visited, power(3, pattern.free_count()));
    EXPECT_EQ(res.candidates, res.visited);
  }
}

TEST(IsoSearch, ThreadCountDoesNotChangeResults) {
  PrimeField f(3);
  auto t = evolution_to_tensor(build_bnk(f, 1, 4));
  auto moved = change_basis(t, [&] {
    auto p = identity_matrix(f, 5);
    p(0, 3) = f.one();
    p(2, 4) = f.from_int(2);
    return p;
  }());
  for (auto mode : {SearchMode::CountAll, SearchMode::FirstWitness}) {
    IsoOptions one, four;
    one.search = {mode, 100'000'000, 1, 1000};
    four.search = {mode, 100'000'000, 4, 1000};
    auto a = find_isomorphisms(t, moved, one);
    auto b = find_isomorphisms(t, moved, four);
    EXPECT_EQ(a.search.visited, b.search.visited);
    EXPECT_EQ(a.search.witness_count, b.search.witness_count);
    EXPECT_EQ(a.search.witnesses, b.search.witnesses);
    EXPECT_GT(a.search.witness_count, 0u);
  }
}

TEST(IsoSearch, PatternMatchesFullGroupOnSmallAlgebras) {
  std::mt19937_64 rng(65);
  PrimeField f(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    auto s = evolution_to_tensor(permute_basis(random_upper_triangular(f, n, rng), rng));
    auto d = trial % 2 ? change_basis(s, random_invertible(f, n, rng))
                       : evolution_to_tensor(permute_basis(random_upper_triangular(f, n, rng), rng));
    IsoOptions restricted{count_all()}, full{count_all()};
    full.full_pattern = true;
    auto a = find_isomorphisms(s, d, restricted);
    auto b = find_isomorphisms(s, d, full);
    EXPECT_EQ(a.search.witness_count, b.search.witness_count) << "trial " << trial;
    EXPECT_EQ(a.isomorphic(), b.isomorphic());
    if (trial % 2) {
      EXPECT_TRUE(a.isomorphic());
    }
  }
}

TEST(IsoSearch, Errors) {
  PrimeField f(3);
  auto t = evolution_to_tensor(build_bnk(f, 1, 4));
  try {
    iso_search(t, t, SearchPattern::full(5), {SearchMode::CountAll, 1000, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  Rationals q;
  auto tq = evolution_to_tensor(build_bnk(q, 1, 2));
  try {
    iso_search(tq, tq, SearchPattern::full(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfiniteFieldUnsupported);
  }
}

TEST(IsoSearch, DifferentTypesAreIncompatible) {
  PrimeField f(3);
  auto a = evolution_to_tensor(build_ma2(f, ma2_minimal(f, 1, 1, 2, f.one())));
  auto b = evolution_to_tensor(build_elr(f, ElrParams<PrimeField>{1, 1, 2, residues(f, {1}), residues(f, {1})}));
  auto rep = find_isomorphisms(a, b);
  EXPECT_FALSE(rep.compatible);
  EXPECT_FALSE(rep.isomorphic());
  IsoOptions full;
  full.full_pattern = true;
  EXPECT_FALSE(find_isomorphisms(a, b, full).isomorphic());
}

TEST(FamilyReport, BnkAgainstTypeOnes) {
  PrimeField f(3);
  auto src = evolution_to_tensor(build_bnk(f, 1, 4));
  std::vector<FamilyMember<PrimeField>> family;
  for (const auto& p : enumerate_type_ones(f, 1, 4)) family.push_back({"", evolution_to_tensor(build_type_ones(f, p))});
  auto rep = family_noniso_report(src, family);
  EXPECT_EQ(rep.entries.size(), 54u);
  EXPECT_EQ(rep.verdict(), "NONE_ISOMORPHIC");
}

TEST(FamilyReport, MemberOfOwnFamily) {
  PrimeField f(3);
  auto src = evolution_to_tensor(build_elr(f, ElrParams<PrimeField>{1, 1, 1, residues(f, {1}), residues(f, {1})}));
  std::vector<FamilyMember<PrimeField>> family;
  for (const auto& p : enumerate_elr(f, 1, 1, 1)) {
    family.push_back({to_json(p).dump(), evolution_to_tensor(build_elr(f, p))});
  }
  auto rep = family_noniso_report(src, family);
  EXPECT_EQ(rep.verdict(), "SOME_ISOMORPHIC");
  EXPECT_FALSE(rep.witnesses.empty());
  EXPECT_TRUE(rep.entries.front().searched);
  EXPECT_GT(rep.entries.front().witness_count, 0u);
}
