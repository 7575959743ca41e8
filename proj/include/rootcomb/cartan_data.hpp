#pragma once

// Dynkin data for the indecomposable types, Bourbaki numbering.
//
// Every type is given by its diagram edges and the squared length of each
// simple root (shortest root has length 1). The Cartan matrix follows:
//
//   cartan(i, i) = 2
//   cartan(i, j) = <alpha_j, alpha_i^vee> = -max(1, len_j / len_i)  for i ~ j
//   cartan(i, j) = 0                                               otherwise
//
// so column j holds the fundamental-weight coordinates of alpha_j. The full
// matrices for the exceptional types and small classical ranks are listed in
// docs/cartan_matrices.md.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rootcomb/errors.hpp"

namespace rootcomb {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

struct DynkinData {
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 1-based node pairs
  std::vector<int> lengths;                                 // squared lengths, index 0 = alpha_1
};

// Throws InvalidType naming the violated rank constraint.
inline void check_rank_bounds(Family f, std::size_t rank) {
  constexpr std::size_t kMaxClassicalRank = 64;
  const std::string name = std::string(1, family_letter(f)) + std::to_string(rank);
  switch (f) {
    case Family::A:
      if (rank < 1) throw InvalidType(name + ": type A_r requires r >= 1");
      break;
    case Family::B:
      if (rank < 2) throw InvalidType(name + ": type B_r requires r >= 2");
      break;
    case Family::C:
      if (rank < 2) throw InvalidType(name + ": type C_r requires r >= 2");
      break;
    case Family::D:
      if (rank < 4) throw InvalidType(name + ": type D_r requires r >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw InvalidType(name + ": type E_r requires r in {6,7,8}");
      return;
    case Family::F:
      if (rank != 4) throw InvalidType(name + ": type F_r requires r = 4");
      return;
    case Family::G:
      if (rank != 2) throw InvalidType(name + ": type G_r requires r = 2");
      return;
  }
  if (rank > kMaxClassicalRank)
    throw InvalidType(name + ": rank above the supported maximum of 64");
}

inline DynkinData dynkin_data(Family f, std::size_t r) {
  check_rank_bounds(f, r);
  DynkinData d;
  d.lengths.assign(r, 1);
  auto chain = [&](std::size_t last) {
    for (std::size_t i = 1; i < last; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (f) {
    case Family::A:
      chain(r);
      break;
    case Family::B:  // alpha_r short
      chain(r);
      for (std::size_t i = 0; i + 1 < r; ++i) d.lengths[i] = 2;
      break;
    case Family::C:  // alpha_r long
      chain(r);
      d.lengths[r - 1] = 2;
      break;
    case Family::D:
      chain(r - 1);
      d.edges.emplace_back(r - 2, r);
      break;
    case Family::E:
      d.edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      for (std::size_t i = 6; i < r; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      chain(4);
      d.lengths = {2, 2, 1, 1};
      break;
    case Family::G:  // alpha_1 short
      chain(2);
      d.lengths = {1, 3};
      break;
  }
  return d;
}

}  // namespace rootcomb
