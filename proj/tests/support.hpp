#pragma once

// Independent oracles and seeded generators shared by the unit suites and the
// acceptance binary. Nothing here calls the closure/reduction code it is meant to check.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <rootcomb/rootcomb.hpp>

namespace support {

using rootcomb::Family;
using rootcomb::Int;
using rootcomb::RootSystem;
using rootcomb::RootSystemType;
using rootcomb::Weight;

// Fixed seeds only; every property run is reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(gen_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 1)); }

  Weight weight(std::size_t rank, Int lo, Int hi) {
    Weight w(rank);
    for (std::size_t k = 0; k < rank; ++k) w[k] = uniform(lo, hi);
    return w;
  }
  Weight dominant(std::size_t rank, Int hi) { return weight(rank, 0, hi); }

  std::vector<std::size_t> word(std::size_t rank, std::size_t max_len) {
    std::vector<std::size_t> w(static_cast<std::size_t>(uniform(0, static_cast<Int>(max_len))));
    for (auto& s : w) s = static_cast<std::size_t>(uniform(1, static_cast<Int>(rank)));
    return w;
  }

 private:
  std::mt19937_64 gen_;
};

inline std::uint64_t seed_for(const RootSystemType& t, std::uint64_t salt) {
  return salt * 1000003u + static_cast<std::uint64_t>(t.family) * 101u + t.rank;
}

// Classical invariants from the Bourbaki plates: |R+|, h, |X/ZR|.
struct TypeFacts {
  Int positive_roots, coxeter, fundamental_group;
};

inline TypeFacts facts(const RootSystemType& t) {
  const Int r = static_cast<Int>(t.rank);
  switch (t.family) {
    case Family::A: return {r * (r + 1) / 2, r + 1, r + 1};
    case Family::B: return {r * r, 2 * r, 2};
    case Family::C: return {r * r, 2 * r, 2};
    case Family::D: return {r * (r - 1), 2 * r - 2, 4};
    case Family::E:
      if (r == 6) return {36, 12, 3};
      if (r == 7) return {63, 18, 2};
      return {120, 30, 1};
    case Family::F: return {24, 12, 1};
    case Family::G: return {6, 6, 1};
  }
  return {0, 0, 0};
}

// Positive roots in the simple-root basis via root strings: beta + alpha_i is a root iff
// q = p - <beta, alpha_i^vee> > 0, p the largest k with beta - k alpha_i a root.
inline std::set<std::vector<Int>> roots_by_strings(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  std::set<std::vector<Int>> roots;
  std::vector<std::vector<Int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& beta : layer)
      for (std::size_t i = 0; i < n; ++i) {
        Int pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += beta[j] * rs.cartan()(i, j);
        Int p = 0;
        for (auto down = beta;;) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pair > 0) {
          auto up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    layer = std::move(next);
  }
  return roots;
}

// The whole finite Weyl group by breadth-first search on matrices; the BFS depth of an
// element is its Cayley-graph distance from the identity, i.e. its length.
inline std::map<std::vector<Int>, std::size_t> cayley_lengths(const RootSystem& rs) {
  auto key = [&](const rootcomb::IntMatrix& m) {
    std::vector<Int> k;
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) k.push_back(m(r, c));
    return k;
  };
  std::vector<rootcomb::WeylElement> gens;
  for (std::size_t i = 1; i <= rs.rank(); ++i) gens.push_back(rootcomb::simple_reflection(rs, i));
  std::map<std::vector<Int>, std::size_t> dist;
  std::deque<rootcomb::IntMatrix> queue{rootcomb::IntMatrix::identity(rs.rank())};
  dist[key(queue.front())] = 0;
  while (!queue.empty()) {
    const auto m = queue.front();
    queue.pop_front();
    const std::size_t d = dist[key(m)];
    for (const auto& g : gens) {
      auto next = m * g.matrix;
      if (dist.emplace(key(next), d + 1).second) queue.push_back(next);
    }
  }
  return dist;
}

// Closed-alcove representative of W_l . lambda found by breadth-first search over the
// Coxeter generators s_1..s_r and s_{alpha_0, l} acting on x = lambda + rho, confined to a box.
inline std::optional<Weight> bfs_alcove_representative(const RootSystem& rs, const Weight& lambda, Int l,
                                                       Int radius) {
  const std::size_t n = rs.rank();
  const auto& a0 = rs.highest_short_root();
  auto in_closed = [&](const Weight& x) {
    for (std::size_t k = 0; k < n; ++k)
      if (x[k] < 0) return false;
    return rs.pairing(x, a0) <= l;
  };
  auto in_box = [&](const Weight& x) { return x.max_abs() <= radius; };
  const Weight start = lambda + rs.rho();
  std::set<Weight> seen{start};
  std::deque<Weight> queue{start};
  while (!queue.empty()) {
    const Weight x = queue.front();
    queue.pop_front();
    if (in_closed(x)) return x - rs.rho();
    std::vector<Weight> nbrs;
    for (std::size_t i = 1; i <= n; ++i) nbrs.push_back(x - x[i - 1] * rs.simple_root(i).weight);
    nbrs.push_back(x - (rs.pairing(x, a0) - l) * a0.weight);
    for (auto& y : nbrs)
      if (in_box(y) && seen.insert(y).second) queue.push_back(std::move(y));
  }
  return std::nullopt;
}

// Dominance-order minuscule test: lambda != 0 dominant and no dominant mu (0 included)
// with lambda - mu a nonzero sum of positive roots.
inline bool minuscule_by_dominance(const RootSystem& rs, const Weight& lambda) {
  if (lambda.is_zero()) return false;
  const std::size_t n = rs.rank();
  const Int det = rs.cartan_determinant();
  auto scaled = rs.scaled_root_coords(lambda);
  std::vector<Int> cap(n);
  for (std::size_t j = 0; j < n; ++j) {
    // root coordinates of a dominant weight are non-negative rationals
    cap[j] = scaled[j] / det;
    if (cap[j] < 0) cap[j] = 0;
  }
  std::vector<Int> c(n, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < n && c[k] == cap[k]) c[k++] = 0;
    if (k == n) return true;
    ++c[k];
    Weight mu = lambda;
    for (std::size_t j = 0; j < n; ++j) mu -= c[j] * rs.simple_root(j + 1).weight;
    if (mu.is_dominant()) return false;
  }
}

// Dynkin diagram automorphism as a permutation of 1-based nodes; nullopt when trivial.
inline std::optional<std::vector<std::size_t>> diagram_automorphism(const RootSystemType& t) {
  const std::size_t r = t.rank;
  std::vector<std::size_t> perm(r);
  for (std::size_t k = 0; k < r; ++k) perm[k] = k + 1;
  if (t.family == Family::A && r >= 2) {
    for (std::size_t k = 0; k < r; ++k) perm[k] = r - k;
    return perm;
  }
  if (t.family == Family::D) {
    std::swap(perm[r - 2], perm[r - 1]);
    return perm;
  }
  if (t.family == Family::E && r == 6) {
    std::swap(perm[0], perm[5]);
    std::swap(perm[2], perm[4]);
    return perm;
  }
  return std::nullopt;
}

inline Weight permuted(const Weight& w, const std::vector<std::size_t>& perm) {
  Weight out(w.rank());
  for (std::size_t k = 0; k < w.rank(); ++k) out[perm[k] - 1] = w[k];
  return out;
}

}  // namespace support
