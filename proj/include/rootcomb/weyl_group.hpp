#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootcomb/root_system.hpp"

namespace rootcomb {

// Finite Weyl group element as an automorphism of X in the fundamental-weight basis.
// `word` (1-based simple indices, w = s_{word[0]} s_{word[1]} ...) is carried when known;
// equality is always matrix equality.
struct WeylElement {
  IntMatrix matrix;
  std::optional<std::vector<std::size_t>> word;

  static WeylElement identity(std::size_t rank) {
    return {IntMatrix::identity(rank), std::vector<std::size_t>{}};
  }

  std::size_t rank() const noexcept { return matrix.size(); }
  bool is_identity() const { return matrix == IntMatrix::identity(rank()); }
  Weight operator()(const Weight& lambda) const { return matrix.apply(lambda); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

// a * b acts as a(b(x)).
inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement out{a.matrix * b.matrix, std::nullopt};
  if (a.word && b.word) {
    std::vector<std::size_t> w = *a.word;
    w.insert(w.end(), b.word->begin(), b.word->end());
    out.word = std::move(w);
  }
  return out;
}

// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
inline WeylElement simple_reflection(const RootSystem& rs, std::size_t i) {
  rs.check_index(i);
  const std::size_t n = rs.rank();
  IntMatrix m = IntMatrix::identity(n);
  const Weight& a = rs.simple_root(i).weight;
  for (std::size_t r = 0; r < n; ++r) m(r, i - 1) -= a[r];
  return {std::move(m), std::vector<std::size_t>{i}};
}

inline WeylElement from_word(const RootSystem& rs, const std::vector<std::size_t>& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (std::size_t i : word) w = compose(w, simple_reflection(rs, i));
  return w;
}

inline WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  if (w.word) {
    std::vector<std::size_t> rev(w.word->rbegin(), w.word->rend());
    return from_word(rs, rev);
  }
  // w has finite order; w^{-1} = w^{k-1} for the first k with w^k = 1.
  WeylElement acc = w, prev = WeylElement::identity(rs.rank());
  while (!acc.is_identity()) {
    prev = acc;
    acc = compose(acc, w);
  }
  return prev;
}

// Reflection s_alpha for a positive root, with a (not necessarily reduced) word u s_i u^{-1}.
inline WeylElement root_reflection(const RootSystem& rs, const Root& alpha) {
  const std::size_t n = rs.rank();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= alpha.weight[r] * alpha.coroot_coords[c];
  std::vector<std::size_t> word = alpha.conjugator;
  word.push_back(alpha.base);
  word.insert(word.end(), alpha.conjugator.rbegin(), alpha.conjugator.rend());
  return {std::move(m), std::move(word)};
}

// Number of positive roots sent to negative roots.
inline std::size_t length(const RootSystem& rs, const WeylElement& w) {
  if (w.rank() != rs.rank()) throw DomainError("length: element does not belong to " + rs.name());
  std::size_t count = 0;
  for (const Root& a : rs.positive_roots()) {
    const auto idx = rs.signed_root_index(w(a.weight));
    ROOTCOMB_INVARIANT(idx.has_value(), "matrix does not permute the roots");
    if (*idx < 0) ++count;
  }
  return count;
}

// Longest element of the parabolic subgroup W_sub (1-based indices), with a reduced word.
inline WeylElement longest_element(const RootSystem& rs, const std::vector<std::size_t>& sub) {
  for (std::size_t i : sub) rs.check_index(i);
  WeylElement w = WeylElement::identity(rs.rank());
  std::vector<std::size_t> word;
  Weight x = rs.rho();  // x = w(rho)
  for (;;) {
    // w^{-1} alpha_i > 0 exactly when <w(rho), alpha_i^vee> > 0; then l(s_i w) = l(w) + 1.
    auto it = std::find_if(sub.begin(), sub.end(), [&](std::size_t i) { return x[i - 1] > 0; });
    if (it == sub.end()) break;
    const WeylElement s = simple_reflection(rs, *it);
    x = s(x);
    w.matrix = s.matrix * w.matrix;
    word.insert(word.begin(), *it);
  }
  w.word = std::move(word);
  return w;
}

inline WeylElement longest_element(const RootSystem& rs) {
  std::vector<std::size_t> all(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) all[i] = i + 1;
  return longest_element(rs, all);
}

// S \ {alpha_i}.
inline std::vector<std::size_t> complement_of(const RootSystem& rs, std::size_t i) {
  rs.check_index(i);
  std::vector<std::size_t> sub;
  for (std::size_t k = 1; k <= rs.rank(); ++k)
    if (k != i) sub.push_back(k);
  return sub;
}

// The product w_0 w_i read with w_0 applied first, i.e. the map x -> w_i(w_0(x)).
// In this order t(l varpi_i) w_0 w_i sends 0 to (l - h) varpi_i under the dot action;
// the other order has the same length but does not.
inline WeylElement w0_wi(const RootSystem& rs, std::size_t i) {
  rs.check_index(i);
  return compose(longest_element(rs, complement_of(rs, i)), longest_element(rs));
}

// l(w_0 w_i) = |R+| - |R_i+|; only defined for minuscule indices.
inline std::size_t l_w0wi(const RootSystem& rs, std::size_t i) {
  rs.check_index(i);
  if (!rs.in_J(i))
    throw DomainError("l_w0wi: index " + std::to_string(i) + " is not in J for " + rs.name());
  const std::size_t len = length(rs, w0_wi(rs, i));
  std::size_t outside = 0;
  for (const Root& a : rs.positive_roots())
    if (a.root_coords[i - 1] != 0) ++outside;
  ROOTCOMB_INVARIANT(len == outside, "l(w_0 w_i) differs from |R+| - |R_i+|");
  return len;
}

// Returns (mu, w) with mu dominant and w(lambda) = mu. Reflects the first negative
// coordinate each step; every step lowers the number of inversions of w^{-1}.
inline std::pair<Weight, WeylElement> make_dominant(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  Weight x = lambda;
  WeylElement w = WeylElement::identity(rs.rank());
  std::vector<std::size_t> word;
  for (;;) {
    std::size_t i = 0;
    while (i < x.rank() && x[i] >= 0) ++i;
    if (i == x.rank()) break;
    const WeylElement s = simple_reflection(rs, i + 1);
    x = s(x);
    w.matrix = s.matrix * w.matrix;
    word.insert(word.begin(), i + 1);
  }
  w.word = std::move(word);
  return {std::move(x), std::move(w)};
}

}  // namespace rootcomb
