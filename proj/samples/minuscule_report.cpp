// Prints h, J and the minuscule degrees for every type up to rank 8, then the
// reduction of a few weights of A_2 at level 5.

#include <iostream>

#include "rootcomb/rootcomb.hpp"

int main() {
  using namespace rootcomb;

  for (const auto& row : minuscule_table(8)) {
    std::cout << row.type.name() << "  h=" << row.h << "  J={";
    for (std::size_t k = 0; k < row.J.size(); ++k) std::cout << (k ? "," : "") << row.J[k];
    std::cout << "}  d=";
    for (std::size_t k = 0; k < row.degrees.size(); ++k) std::cout << (k ? "," : "") << row.degrees[k];
    std::cout << "\n";
  }

  const RootSystem& a2 = root_system("A2");
  for (const Weight& lambda : {Weight{10, -5}, Weight{2, 0}, Weight{7, 7}}) {
    const Reduction r = reduce_to_closed_alcove(a2, lambda, 5);
    std::cout << "A2, l=5: " << lambda << " -> " << r.weight << " in " << r.steps.size() << " steps\n";
  }
}
