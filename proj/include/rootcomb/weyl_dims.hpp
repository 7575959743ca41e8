#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rootcomb/root_system.hpp"
#include "rootcomb/weyl_group.hpp"

namespace rootcomb {

using BigInt = boost::multiprecision::cpp_int;

struct DegreeValue {
  BigInt value;
  // (<lambda+rho, alpha^vee>, <rho, alpha^vee>) per positive root, when requested.
  std::optional<std::vector<std::pair<Int, Int>>> factor_trace;
};

// d(lambda) = prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>, exactly.
inline DegreeValue weyl_degree(const RootSystem& rs, const Weight& lambda, bool trace = false) {
  rs.check_rank(lambda);
  if (!lambda.is_dominant())
    throw DomainError("weyl_degree: weight " + lambda.to_string() + " is not dominant");
  const Weight x = lambda + rs.rho();
  BigInt num = 1, den = 1;
  DegreeValue out;
  if (trace) out.factor_trace.emplace();
  for (const Root& a : rs.positive_roots()) {
    const Int top = rs.pairing(x, a);
    num *= top;
    den *= a.height;
    if (trace) out.factor_trace->emplace_back(top, a.height);
  }
  ROOTCOMB_INVARIANT(num % den == 0, "Weyl degree is not integral");
  out.value = num / den;
  ROOTCOMB_INVARIANT(out.value > 0, "Weyl degree is not positive");
  return out;
}

inline BigInt binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (Int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

struct LevelProfile {
  std::size_t i = 0;
  std::map<Int, Int> counts;  // k -> e(k), 1 <= k <= h - 1

  Int total() const {
    Int s = 0;
    for (auto [k, e] : counts) s += e;
    return s;
  }
};

// e(k) = #{ alpha in R+ \ R_i+ : <rho, alpha^vee> = k }.
inline LevelProfile level_profile(const RootSystem& rs, std::size_t i) {
  rs.check_index(i);
  if (!rs.in_J(i))
    throw DomainError("level_profile: index " + std::to_string(i) + " is not in J for " + rs.name());
  LevelProfile p;
  p.i = i;
  for (Int k = 1; k < rs.coxeter_number(); ++k) p.counts[k] = 0;
  for (const Root& a : rs.positive_roots())
    if (a.root_coords[i - 1] != 0) ++p.counts[a.height];
  return p;
}

// prod_{k=1}^{h-1} ((l - h + k) / k)^{e(k)}, the degree of (l - h) varpi_i.
inline DegreeValue degree_via_profile(const RootSystem& rs, std::size_t i, Int l) {
  if (l <= rs.coxeter_number())
    throw DomainError("degree_via_profile: requires l > h");
  const LevelProfile prof = level_profile(rs, i);
  const Int h = rs.coxeter_number();
  BigInt num = 1, den = 1;
  DegreeValue out;
  for (auto [k, e] : prof.counts)
    for (Int t = 0; t < e; ++t) {
      num *= (l - h + k);
      den *= k;
    }
  ROOTCOMB_INVARIANT(num % den == 0, "profile product is not integral");
  out.value = num / den;
  return out;
}

// All dominant lambda (restricted for p when given) with d(lambda) <= bound, sorted
// lexicographically. Prunes on strict monotonicity of d in each coordinate.
inline std::vector<std::pair<Weight, DegreeValue>> enumerate_small_degree(
    const RootSystem& rs, const BigInt& bound, std::optional<Int> restricted_for = std::nullopt) {
  if (bound < 1) throw DomainError("enumerate_small_degree: bound must be >= 1");
  std::vector<std::pair<Weight, DegreeValue>> out;
  Weight lambda(rs.rank());
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == rs.rank()) {
      out.emplace_back(lambda, weyl_degree(rs, lambda));
      return;
    }
    for (Int v = 0;; ++v) {
      if (restricted_for && v >= *restricted_for) break;
      lambda[k] = v;
      // Remaining coordinates are zero, so this is the minimum over the subtree.
      if (weyl_degree(rs, lambda).value > bound) break;
      self(self, k + 1);
    }
    lambda[k] = 0;
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace rootcomb
