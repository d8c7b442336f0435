// Builds E_lr over Q, prints its type and the attached graph as DOT.
#include <iostream>

#include "evokit/evokit.hpp"

int main() {
  using namespace evokit;
  const Rationals q;
  ElrParams<Rationals> p{2, 2, 1, {Rational(1), Rational(3)}, {Rational(1), Rational(-1, 2)}};
  auto a = build_elr(q, p);

  std::cout << "type:";
  for (auto part : type_signature(evolution_to_tensor(a)).parts) std::cout << ' ' << part;
  std::cout << "\n\n" << to_dot(graph_of(a));
}
