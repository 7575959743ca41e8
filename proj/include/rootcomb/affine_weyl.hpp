#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rootcomb/root_system.hpp"
#include "rootcomb/weyl_group.hpp"

namespace rootcomb {

// x -> w(x) + level * translation, an element of the extended affine Weyl group at `level`.
struct AffineElement {
  WeylElement finite;
  Weight translation;
  Int level = 1;

  static AffineElement identity(std::size_t rank, Int level) {
    return {WeylElement::identity(rank), Weight(rank), level};
  }
  bool is_identity() const { return finite.is_identity() && translation.is_zero(); }
  Weight operator()(const Weight& x) const { return finite(x) + level * translation; }

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.finite == b.finite && a.translation == b.translation && a.level == b.level;
  }
};

inline void require_level_above_h(const RootSystem& rs, Int l, const char* op) {
  if (l <= rs.coxeter_number())
    throw DomainError(std::string(op) + ": level " + std::to_string(l) +
                      " violates the standing assumption l > h (h = " +
                      std::to_string(rs.coxeter_number()) + " for " + rs.name() + ")");
}

// a * b acts as a(b(x)).
inline AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.level != b.level) throw DomainError("compose: level mismatch");
  return {compose(a.finite, b.finite), a.finite(b.translation) + a.translation, a.level};
}

inline AffineElement affine_inverse(const RootSystem& rs, const AffineElement& g) {
  WeylElement winv = inverse(rs, g.finite);
  Weight t = -winv(g.translation);
  return {std::move(winv), std::move(t), g.level};
}

// Dot action: g . lambda = g(lambda + rho) - rho.
inline Weight dot_apply(const RootSystem& rs, const AffineElement& g, const Weight& lambda) {
  rs.check_rank(lambda);
  if (g.finite.rank() != rs.rank()) throw DomainError("dot_apply: element rank mismatch");
  return g(lambda + rs.rho()) - rs.rho();
}

inline Weight dot_apply(const RootSystem& rs, const AffineElement& g, const Weight& lambda,
                        Int expected_level) {
  if (g.level != expected_level) throw DomainError("dot_apply: level mismatch");
  return dot_apply(rs, g, lambda);
}

// Element of W_l (as opposed to the extended group) iff the translation lies in ZR.
inline bool in_affine_weyl_group(const RootSystem& rs, const AffineElement& g) {
  return rs.in_root_lattice(g.translation);
}

// s_{alpha, k l}: x -> s_alpha(x) + k l alpha.
inline AffineElement affine_reflection(const RootSystem& rs, const Root& alpha, Int k, Int l) {
  return {root_reflection(rs, alpha), k * alpha.weight, l};
}

// gamma_i = t(l varpi_i) w_0 w_i.
inline AffineElement gamma(const RootSystem& rs, std::size_t i, Int l) {
  if (!rs.in_J(i)) throw DomainError("gamma: index " + std::to_string(i) + " is not in J");
  return {w0_wi(rs, i), Weight::fundamental(rs.rank(), i), l};
}

enum class AlcovePosition { interior, boundary, exterior };

inline const char* to_string(AlcovePosition p) {
  switch (p) {
    case AlcovePosition::interior: return "interior";
    case AlcovePosition::boundary: return "boundary";
    case AlcovePosition::exterior: return "exterior";
  }
  return "?";
}

struct AlcovePoint {
  Weight weight;
  Int level = 0;
  std::vector<Int> wall_profile;  // <lambda + rho, alpha^vee> over R+ in enumeration order
  AlcovePosition position = AlcovePosition::exterior;

  bool in_open() const { return position == AlcovePosition::interior; }
  bool in_closed() const { return position != AlcovePosition::exterior; }
};

struct LevelPolicy {
  bool allow_level_equal_h = false;  // permit l = h for closed-alcove tests at p = h
};

inline AlcovePoint alcove_position(const RootSystem& rs, const Weight& lambda, Int l,
                                   LevelPolicy policy = {}) {
  rs.check_rank(lambda);
  if (!(policy.allow_level_equal_h && l == rs.coxeter_number()))
    require_level_above_h(rs, l, "alcove_position");
  AlcovePoint pt{lambda, l, {}, AlcovePosition::interior};
  const Weight x = lambda + rs.rho();
  bool open = true, closed = true;
  for (const Root& a : rs.positive_roots()) {
    const Int v = rs.pairing(x, a);
    pt.wall_profile.push_back(v);
    if (!(0 < v && v < l)) open = false;
    if (!(0 <= v && v <= l)) closed = false;
  }
  pt.position = open ? AlcovePosition::interior
                     : (closed ? AlcovePosition::boundary : AlcovePosition::exterior);
  return pt;
}

struct Reduction {
  Weight weight;                   // the representative in the closed lowest alcove
  AffineElement witness;           // witness . lambda == weight, witness in W_l
  std::vector<std::string> steps;  // generators in application order
};

namespace detail {

// W-invariant positive definite quadratic form sum_{alpha > 0} <x, alpha^vee>^2.
inline Int invariant_norm(const RootSystem& rs, const Weight& x) {
  Int n = 0;
  for (const Root& a : rs.positive_roots()) {
    const Int v = rs.pairing(x, a);
    n += v * v;
  }
  return n;
}

inline std::string root_label(const Root& a) {
  std::string s = "[";
  for (std::size_t k = 0; k < a.root_coords.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(a.root_coords[k]);
  }
  return s + "]";
}

}  // namespace detail

// Representative of the W_l dot-orbit of lambda in the closed lowest alcove.
//
// Works on x = lambda + rho: make x dominant, then reflect across the highest wall
// H_{alpha, k l} below <x, alpha^vee> for the first alpha in R+ with <x, alpha^vee> > l.
// That wall separates x from the origin, so the invariant norm strictly drops.
inline Reduction reduce_to_closed_alcove(const RootSystem& rs, const Weight& lambda, Int l) {
  rs.check_rank(lambda);
  require_level_above_h(rs, l, "reduce_to_closed_alcove");
  constexpr long kIterationCap = 1'000'000;

  Reduction out{{}, AffineElement::identity(rs.rank(), l), {}};
  Weight x = lambda + rs.rho();
  Int norm = detail::invariant_norm(rs, x);
  for (long iter = 0;; ++iter) {
    ROOTCOMB_INVARIANT(iter < kIterationCap, "reduction exceeded the iteration cap");
    for (;;) {
      std::size_t i = 0;
      while (i < x.rank() && x[i] >= 0) ++i;
      if (i == x.rank()) break;
      const WeylElement s = simple_reflection(rs, i + 1);
      x = s(x);
      out.witness = compose(AffineElement{s, Weight(rs.rank()), l}, out.witness);
      out.steps.push_back("s" + std::to_string(i + 1));
    }
    const Root* violated = nullptr;
    Int v = 0;
    for (const Root& a : rs.positive_roots()) {
      v = rs.pairing(x, a);
      if (v > l) {
        violated = &a;
        break;
      }
    }
    if (!violated) break;
    const Int k = (v - 1) / l;  // largest k with k l < v; k >= 1 since v > l
    const AffineElement r = affine_reflection(rs, *violated, k, l);
    x = r(x);
    out.witness = compose(r, out.witness);
    out.steps.push_back("s" + detail::root_label(*violated) + "," + std::to_string(k * l));
    const Int next = detail::invariant_norm(rs, x);
    ROOTCOMB_INVARIANT(next < norm, "reduction potential did not decrease");
    norm = next;
  }
  out.weight = x - rs.rho();
  return out;
}

// Representatives of X / ZR built from sums of fundamental weights.
inline std::vector<Weight> coset_representatives(const RootSystem& rs) {
  std::vector<Weight> reps{Weight(rs.rank())};
  for (std::size_t head = 0; head < reps.size(); ++head)
    for (std::size_t k = 1; k <= rs.rank(); ++k) {
      const Weight cand = reps[head] + Weight::fundamental(rs.rank(), k);
      const bool known = std::any_of(reps.begin(), reps.end(),
                                     [&](const Weight& r) { return rs.in_root_lattice(cand - r); });
      if (!known) reps.push_back(cand);
    }
  ROOTCOMB_INVARIANT(static_cast<Int>(reps.size()) == rs.fundamental_group_order(),
                     "coset count differs from |det cartan|");
  return reps;
}

// Dot-orbit of 0 generated breadth-first inside the box |lambda_i| <= radius.
// Plain: all affine reflections s_{alpha, n l}. Extended: additionally the translations
// t(+-l varpi_k) for every k and the elements t(l varpi_i) w_0 w_i for i in J.
inline std::unordered_set<Weight, WeightHash> bfs_dot_orbit_of_zero(const RootSystem& rs, Int l,
                                                                    bool extended, Int radius) {
  const std::size_t n = rs.rank();
  const Weight rho = rs.rho();
  auto in_box = [&](const Weight& x) {
    for (std::size_t k = 0; k < n; ++k)
      if (x[k] - 1 > radius || x[k] - 1 < -radius) return false;
    return true;
  };
  std::vector<WeylElement> reflections;
  std::vector<Int> bounds;
  for (const Root& a : rs.positive_roots()) {
    reflections.push_back(root_reflection(rs, a));
    Int b = 0;
    for (std::size_t k = 0; k < n; ++k) b += a.coroot_coords[k] * (radius + 1);
    bounds.push_back(b);
  }
  std::vector<AffineElement> extra;
  if (extended) {
    for (std::size_t k = 1; k <= n; ++k) {
      extra.push_back({WeylElement::identity(n), Weight::fundamental(n, k), l});
      extra.push_back({WeylElement::identity(n), -Weight::fundamental(n, k), l});
    }
    for (std::size_t i : rs.minuscule_indices()) extra.push_back(gamma(rs, i, l));
  }
  auto floor_div = [](Int a, Int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };

  std::unordered_set<Weight, WeightHash> seen;  // x = lambda + rho coordinates
  std::deque<Weight> queue{rho};
  seen.insert(rho);
  auto visit = [&](Weight y) {
    if (in_box(y) && seen.insert(y).second) queue.push_back(std::move(y));
  };
  while (!queue.empty()) {
    const Weight x = std::move(queue.front());
    queue.pop_front();
    const auto roots = rs.positive_roots();
    for (std::size_t r = 0; r < roots.size(); ++r) {
      // s_{alpha,nl}(x) = s_alpha(x) + n l alpha has pairing 2nl - v with alpha^vee.
      const Int v = rs.pairing(x, roots[r]);
      const Int lo = floor_div(v - bounds[r], 2 * l);
      const Int hi = floor_div(v + bounds[r], 2 * l) + 1;
      const Weight sx = reflections[r](x);
      for (Int m = lo; m <= hi; ++m) visit(sx + (m * l) * roots[r].weight);
    }
    for (const AffineElement& g : extra) visit(g(x));
  }
  std::unordered_set<Weight, WeightHash> out;
  for (const Weight& x : seen) out.insert(x - rho);
  return out;
}

// gamma_i . 0 = (l - h) varpi_i.
inline std::vector<AffineElement> omega_elements(const RootSystem& rs, Int l) {
  require_level_above_h(rs, l, "omega_elements");
  std::vector<AffineElement> out{AffineElement::identity(rs.rank(), l)};
  for (std::size_t i : rs.minuscule_indices()) out.push_back(gamma(rs, i, l));
  return out;
}

// {0} u {(l - h) varpi_i : i in J}.
inline std::vector<Weight> extended_orbit_alcove_points(const RootSystem& rs, Int l) {
  require_level_above_h(rs, l, "extended_orbit_alcove_points");
  std::vector<Weight> out{Weight(rs.rank())};
  for (std::size_t i : rs.minuscule_indices())
    out.push_back((l - rs.coxeter_number()) * Weight::fundamental(rs.rank(), i));
  return out;
}

enum class OrbitMethod {
  fast,   // closed-form extended-orbit points {0} u {(l-h) varpi_i}
  coset,  // reduce lambda - l mu for coset representatives mu of X / ZR
  bfs,    // breadth-first orbit generation in a bounded box
};

inline bool in_orbit_of_zero(const RootSystem& rs, const Weight& lambda, Int l, bool extended,
                             OrbitMethod method = OrbitMethod::fast) {
  rs.check_rank(lambda);
  require_level_above_h(rs, l, "in_orbit_of_zero");
  if (method == OrbitMethod::bfs) {
    const Int radius = std::max<Int>(4 * l, lambda.max_abs() + 2 * l);
    return bfs_dot_orbit_of_zero(rs, l, extended, radius).count(lambda) > 0;
  }
  if (!extended) return reduce_to_closed_alcove(rs, lambda, l).weight.is_zero();
  if (method == OrbitMethod::coset) {
    for (const Weight& mu : coset_representatives(rs))
      if (reduce_to_closed_alcove(rs, lambda - l * mu, l).weight.is_zero()) return true;
    return false;
  }
  const Weight red = reduce_to_closed_alcove(rs, lambda, l).weight;
  const auto pts = extended_orbit_alcove_points(rs, l);
  return std::find(pts.begin(), pts.end(), red) != pts.end();
}

}  // namespace rootcomb
