#include <gtest/gtest.h>

#include <random>

#include "evokit/evokit.hpp"
#include "test_support.hpp"

using namespace evokit;
using evokit::testing::rationals;
using evokit::testing::residues;

TEST(EvolutionMatrix, RejectsBadShape) {
  Rationals q;
  EXPECT_THROW(EvolutionMatrix<Rationals>(q, 0), Error);
  EXPECT_THROW(EvolutionMatrix<Rationals>(q, Matrix<Rational>(2, 3, Rational(0))), Error);
}

TEST(StructureTensor, ZeroMatrixGivesZeroTensor) {
  PrimeField f(3);
  auto t = evolution_to_tensor(EvolutionMatrix<PrimeField>(f, 3));
  EXPECT_EQ(t, StructureTensor<PrimeField>(f, 3));
}

TEST(StructureTensor, SingleEntry) {
  Rationals q;
  EvolutionMatrix<Rationals> a(q, 2);
  a(0, 1) = 1;
  auto t = evolution_to_tensor(a);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(t.coefficient(i, j, k), Rational(i == 0 && j == 0 && k == 1 ? 1 : 0));
      }
    }
  }
}

TEST(StructureTensor, ElrTransposition) {
  Rationals q;
  auto t = evolution_to_tensor(build_elr(q, ElrParams<Rationals>{1, 1, 1, rationals({5}), rationals({1})}));
  EXPECT_EQ(t.coefficient(0, 0, 1), Rational(1));
  EXPECT_EQ(t.coefficient(1, 1, 2), Rational(5));
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      for (auto c : t.product(i, j)) nonzero += c.is_zero() ? 0 : 1;
    }
  }
  EXPECT_EQ(nonzero, 2u);
}

TEST(StructureTensor, EvolutionRoundTrip) {
  std::mt19937_64 rng(21);
  PrimeField f(5);
  for (int i = 0; i < 100; ++i) {
    auto a = random_evolution(f, 1 + rng() % 6, rng);
    auto t = evolution_to_tensor(a);
    EXPECT_TRUE(t.is_evolution());
    auto back = tensor_to_evolution(t);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, a);
  }
  StructureTensor<PrimeField> t(f, 2);
  t.set(0, 1, 0, f.one());
  EXPECT_FALSE(tensor_to_evolution(t).has_value());
}

TEST(Multiply, DistinctBasisVectorsAnnihilate) {
  std::mt19937_64 rng(22);
  PrimeField f(7);
  auto t = evolution_to_tensor(random_evolution(f, 5, rng));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      auto p = multiply(t, basis_vector(f, 5, i), basis_vector(f, 5, j));
      for (const auto& x : p) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(Multiply, EubSquare) {
  Rationals q;
  auto t = evolution_to_tensor(build_eub(q, 2, rationals({1, 2})));
  EXPECT_EQ(multiply(t, basis_vector(q, 4, 0), basis_vector(q, 4, 0)), rationals({0, 0, 0, 1}));
  EXPECT_EQ(multiply(t, basis_vector(q, 4, 1), basis_vector(q, 4, 1)), rationals({0, 0, 0, 2}));
}

TEST(Multiply, BnkSquare) {
  PrimeField f(3);
  auto t = evolution_to_tensor(build_bnk(f, 1, 4));
  EXPECT_EQ(multiply(t, basis_vector(f, 5, 1), basis_vector(f, 5, 1)), residues(f, {0, 0, 1, 1, 0}));
}

TEST(Multiply, BilinearAndCommutative) {
  std::mt19937_64 rng(23);
  Rationals q;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto t = random_tensor(q, n, rng);
    auto x = random_vector(q, n, rng), y = random_vector(q, n, rng), z = random_vector(q, n, rng);
    auto c = random_rational(rng);
    std::vector<Rational> xz(n), cx(n);
    for (std::size_t i = 0; i < n; ++i) {
      xz[i] = x[i] + z[i];
      cx[i] = c * x[i];
    }
    EXPECT_EQ(multiply(t, x, y), multiply(t, y, x));
    auto lhs = multiply(t, xz, y);
    auto a = multiply(t, x, y), b = multiply(t, z, y);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(lhs[k], a[k] + b[k]);
    auto scaled = multiply(t, cx, y);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(scaled[k], c * a[k]);
  }
}

TEST(SubspaceProduct, ZeroFactor) {
  PrimeField f(3);
  auto t = evolution_to_tensor(build_bnk(f, 1, 4));
  auto zero = Subspace<PrimeField>::zero(f, 5), whole = Subspace<PrimeField>::whole(f, 5);
  EXPECT_TRUE(subspace_product(t, zero, whole).is_zero());
  EXPECT_TRUE(subspace_product(t, whole, zero).is_zero());
}

TEST(SubspaceProduct, EubSquareIsLastCoordinate) {
  Rationals q;
  auto t = evolution_to_tensor(build_eub(q, 2, rationals({1, 2})));
  auto whole = Subspace<Rationals>::whole(q, 4);
  EXPECT_EQ(subspace_product(t, whole, whole), Subspace<Rationals>::coordinate(q, 4, {3}));
}

TEST(SubspaceProduct, BnkSquareOfSquareByHand) {
  // E^2 = span{h2, h3+h4, h4+h5, h5} = span{h2..h5}; the nine products of
  // {h2,h3,h4,h5} reduce to h3+h4, h4+h5, h5 and zeros.
  PrimeField f(3);
  auto t = evolution_to_tensor(build_bnk(f, 1, 4));
  auto whole = Subspace<PrimeField>::whole(f, 5);
  auto e2 = subspace_product(t, whole, whole);
  EXPECT_EQ(e2, Subspace<PrimeField>::coordinate(f, 5, {1, 2, 3, 4}));
  EXPECT_EQ(subspace_product(t, e2, e2), Subspace<PrimeField>::coordinate(f, 5, {2, 3, 4}));
}

TEST(ChangeBasis, IdentityAndPermutation) {
  std::mt19937_64 rng(24);
  PrimeField f(5);
  auto a = random_evolution(f, 4, rng);
  auto t = evolution_to_tensor(a);
  EXPECT_EQ(change_basis(t, identity_matrix(f, 4)), t);

  const std::vector<std::size_t> order{2, 0, 3, 1};
  auto p = zero_matrix(f, 4, 4);
  for (std::size_t r = 0; r < 4; ++r) p(r, order[r]) = f.one();
  auto moved = tensor_to_evolution(change_basis(t, p));
  ASSERT_TRUE(moved.has_value());
  EXPECT_EQ(*moved, permute(a, order));
}

TEST(ChangeBasis, ProductsMatchInNewCoordinates) {
  // With f_i = sum_j P_ij e_j: f_i f_j computed in old coordinates equals
  // (new coefficients) * P.
  std::mt19937_64 rng(25);
  PrimeField f(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto t = random_tensor(f, n, rng);
    auto p = random_invertible(f, n, rng);
    auto moved = change_basis(t, p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto old_coords = multiply(t, p.row(i), p.row(j));
        auto prod = moved.product(i, j);
        std::vector<Residue> new_coords(prod.begin(), prod.end());
        EXPECT_EQ(apply(f, std::span<const Residue>(new_coords), p), old_coords);
      }
    }
    EXPECT_EQ(change_basis(moved, inverse(f, p)), t);
  }
}

TEST(ChangeBasis, RejectsSingular) {
  PrimeField f(3);
  auto t = evolution_to_tensor(build_bnk(f, 1, 2));
  EXPECT_THROW(change_basis(t, zero_matrix(f, 3, 3)), Error);
}
