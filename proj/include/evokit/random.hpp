#pragma once

// Random algebra data for experiments and property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "evokit/algebra.hpp"
#include "evokit/field.hpp"
#include "evokit/matrix.hpp"

namespace evokit {

inline Residue random_residue(const PrimeField& f, std::mt19937_64& rng) {
  return f.element(static_cast<std::uint32_t>(rng() % f.size()));
}

inline Residue random_nonzero(const PrimeField& f, std::mt19937_64& rng) {
  return f.element(static_cast<std::uint32_t>(1 + rng() % (f.size() - 1)));
}

inline Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 19) - 9;
  long den = static_cast<long>(rng() % 7) + 1;
  return Rational(num, den);
}

inline Rational random_nonzero(const Rationals&, std::mt19937_64& rng) {
  Rational r;
  do r = random_rational(rng);
  while (r.is_zero());
  return r;
}

inline Residue random_scalar(const PrimeField& f, std::mt19937_64& rng) { return random_residue(f, rng); }
inline Rational random_scalar(const Rationals&, std::mt19937_64& rng) { return random_rational(rng); }

template <ExactField F>
std::vector<Scalar_t<F>> random_vector(const F& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<Scalar_t<F>> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

template <ExactField F>
Matrix<Scalar_t<F>> random_matrix(const F& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  auto m = zero_matrix(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  }
  return m;
}

template <ExactField F>
Matrix<Scalar_t<F>> random_invertible(const F& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto m = random_matrix(f, n, n, rng);
    if (is_invertible(f, m)) return m;
  }
}

template <ExactField F>
StructureTensor<F> random_tensor(const F& f, std::size_t n, std::mt19937_64& rng) {
  StructureTensor<F> t(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) t.set_product(i, j, random_vector(f, n, rng));
  }
  return t;
}

/// Random strictly upper triangular structure matrix, each entry nonzero with probability `density`.
template <ExactField F>
EvolutionMatrix<F> random_upper_triangular(const F& f, std::size_t n, std::mt19937_64& rng, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  EvolutionMatrix<F> a(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (keep(rng)) a(i, j) = random_scalar(f, rng);
    }
  }
  return a;
}

template <ExactField F>
EvolutionMatrix<F> random_evolution(const F& f, std::size_t n, std::mt19937_64& rng) {
  return EvolutionMatrix<F>(f, random_matrix(f, n, n, rng));
}

template <ExactField F>
EvolutionMatrix<F> permute_basis(const EvolutionMatrix<F>& a, std::mt19937_64& rng) {
  std::vector<std::size_t> order(a.dim());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  EvolutionMatrix<F> out(a.field(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(order[r], order[c]);
  }
  return out;
}

}  // namespace evokit
