// Power chain and upper annihilating series of B(n,k) over F_3, then the
// isomorphism search of B(1,4) against itself.
#include <iostream>

#include "evokit/evokit.hpp"

int main() {
  using namespace evokit;
  const PrimeField f3(3);
  auto t = evolution_to_tensor(build_bnk(f3, 1, 4));
  auto nil = is_nilpotent(t);

  std::cout << "dim E^k:";
  for (auto d : nil.powers.dims()) std::cout << ' ' << d;
  std::cout << "\ndim ann^i:";
  for (auto d : nil.ann.dims()) std::cout << ' ' << d;
  std::cout << "\nnilpotency index: " << *nil.index << '\n';

  IsoOptions opt;
  opt.search.mode = SearchMode::CountAll;
  auto rep = find_isomorphisms(t, t, opt);
  std::cout << "automorphisms over F3: " << rep.search.witness_count << " (" << rep.search.visited
            << " candidate maps)\n";
}
