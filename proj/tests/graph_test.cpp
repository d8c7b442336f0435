#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "evokit/evokit.hpp"
#include "test_support.hpp"

using namespace evokit;
using evokit::testing::residues;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

}  // namespace

TEST(Graph, ZeroAlgebraHasNoEdges) {
  PrimeField f(3);
  auto g = graph_of(EvolutionMatrix<PrimeField>(f, 4));
  EXPECT_EQ(g.vertices, 4u);
  EXPECT_TRUE(g.edges.empty());
}

TEST(Graph, ElrFanInShape) {
  PrimeField f(5);
  auto g = graph_of(build_elr(f, ElrParams<PrimeField>{2, 2, 2, residues(f, {1, 1}), residues(f, {1, 1})}));
  EXPECT_EQ(g.edges, (Edges{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}}));
}

TEST(Graph, BnkEdges) {
  PrimeField f(3);
  auto g = graph_of(build_bnk(f, 1, 4));
  EXPECT_EQ(g.edges, (Edges{{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST(TriangularWitness, UpperTriangularGivesIdentity) {
  PrimeField f(3);
  auto order = triangular_witness(build_bnk(f, 2, 3));
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(*order, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(TriangularWitness, SelfLoopHasNone) {
  PrimeField f(3);
  EvolutionMatrix<PrimeField> a(f, 3);
  a(0, 0) = f.one();
  a(1, 2) = f.one();
  EXPECT_FALSE(triangular_witness(a).has_value());
}

TEST(TriangularWitness, CycleHasNone) {
  PrimeField f(3);
  EvolutionMatrix<PrimeField> a(f, 3);
  a(0, 1) = a(1, 2) = a(2, 0) = f.one();
  EXPECT_FALSE(triangular_witness(a).has_value());
}

TEST(TriangularWitness, ReversedElr) {
  PrimeField f(3);
  auto a = build_elr(f, ElrParams<PrimeField>{1, 2, 1, residues(f, {1, 1}), residues(f, {1, 0})});
  EXPECT_TRUE(is_triangular_witness(a, {0, 1, 2, 3}));
  const std::vector<std::size_t> reversal{3, 2, 1, 0};
  auto reversed = permute(a, reversal);
  // The reversal itself undoes the relabeling; the smallest-index topological
  // order is another valid witness.
  EXPECT_TRUE(is_triangular_witness(reversed, reversal));
  auto order = triangular_witness(reversed);
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(*order, (std::vector<std::size_t>{1, 3, 2, 0}));
  EXPECT_TRUE(is_triangular_witness(reversed, *order));
}

TEST(TriangularWitness, ExistsIffNilpotent) {
  std::mt19937_64 rng(41);
  PrimeField f(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    EvolutionMatrix<PrimeField> a = trial % 2 ? permute_basis(random_upper_triangular(f, n, rng), rng)
                                              : random_evolution(f, n, rng);
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (rng() % 3 != 0) a(i, j) = f.zero();
        }
      }
    }
    auto order = triangular_witness(a);
    EXPECT_EQ(order.has_value(), is_nilpotent(evolution_to_tensor(a)).nilpotent);
    if (order) {
      EXPECT_TRUE(is_triangular_witness(a, *order));
      auto sorted = *order;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(sorted[i], i);
    }
  }
}

TEST(TriangularWitness, RejectsInvalidOrders) {
  PrimeField f(3);
  auto a = build_bnk(f, 1, 2);
  EXPECT_FALSE(is_triangular_witness(a, {0, 1}));
  EXPECT_FALSE(is_triangular_witness(a, {0, 0, 1}));
  EXPECT_FALSE(is_triangular_witness(a, {2, 1, 0}));
}

TEST(Dot, ExactText) {
  PrimeField f(3);
  auto dot = to_dot(graph_of(build_elr(f, ElrParams<PrimeField>{1, 1, 1, residues(f, {1}), residues(f, {1})})));
  EXPECT_EQ(dot,
            "digraph evolution_algebra {\n"
            "  e1;\n"
            "  e2;\n"
            "  e3;\n"
            "  e1 -> e2;\n"
            "  e2 -> e3;\n"
            "}\n");
}

TEST(Dot, Deterministic) {
  std::mt19937_64 rng(42);
  PrimeField f(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_evolution(f, 5, rng);
    EXPECT_EQ(to_dot(graph_of(a)), to_dot(graph_of(EvolutionMatrix<PrimeField>(a))));
  }
}
