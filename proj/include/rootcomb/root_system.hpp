#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rootcomb/cartan_data.hpp"
#include "rootcomb/errors.hpp"
#include "rootcomb/weight.hpp"

namespace rootcomb {

struct RootSystemType {
  Family family = Family::A;
  std::size_t rank = 1;

  RootSystemType() = default;
  RootSystemType(Family f, std::size_t r) : family(f), rank(r) { check_rank_bounds(f, r); }

  // Accepts "A1", "b3", "E8", ... (case-insensitive, optional '_' between letter and rank).
  static RootSystemType parse(std::string_view spec) {
    std::string s;
    for (char c : spec)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2) throw InvalidType("cannot parse root system '" + std::string(spec) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const std::string_view letters = "ABCDEFG";
    const auto pos = letters.find(letter);
    if (pos == std::string_view::npos)
      throw InvalidType("unknown root system family in '" + std::string(spec) + "'");
    std::string digits = s.substr(1);
    if (!digits.empty() && digits.front() == '_') digits.erase(0, 1);
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InvalidType("cannot parse rank in '" + std::string(spec) + "'");
    return RootSystemType(static_cast<Family>(pos), std::stoul(digits));
  }

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
  friend auto operator<=>(const RootSystemType& a, const RootSystemType& b) {
    if (auto c = a.family <=> b.family; c != 0) return c;
    return a.rank <=> b.rank;
  }
};

// Every buildable type of rank <= max_rank, ordered A, B, C, D, E, F, G then by rank.
inline std::vector<RootSystemType> all_types(std::size_t max_rank) {
  std::vector<RootSystemType> out;
  for (std::size_t r = 1; r <= max_rank; ++r) out.emplace_back(Family::A, r);
  for (std::size_t r = 2; r <= max_rank; ++r) out.emplace_back(Family::B, r);
  for (std::size_t r = 2; r <= max_rank; ++r) out.emplace_back(Family::C, r);
  for (std::size_t r = 4; r <= max_rank; ++r) out.emplace_back(Family::D, r);
  for (std::size_t r = 6; r <= std::min<std::size_t>(8, max_rank); ++r) out.emplace_back(Family::E, r);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  if (max_rank >= 2) out.emplace_back(Family::G, 2);
  return out;
}

struct Root {
  std::vector<Int> root_coords;    // simple-root basis
  std::vector<Int> coroot_coords;  // simple-coroot basis
  Weight weight;                   // fundamental-weight coordinates <alpha, alpha_i^vee>
  bool is_long = true;
  Int height = 0;         // <rho, alpha^vee>, the coroot height
  Int root_height = 0;    // sum of root_coords
  // alpha = u(alpha_base) with u the product of `conjugator` read left to right.
  std::vector<std::size_t> conjugator;
  std::size_t base = 0;   // 1-based index of a simple root conjugate to alpha
};

enum class PrimeClass { bad, good_not_very_good, very_good };

inline const char* to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::bad: return "bad";
    case PrimeClass::good_not_very_good: return "good_not_very_good";
    case PrimeClass::very_good: return "very_good";
  }
  return "?";
}

struct PrimeVerdict {
  PrimeClass cls;
  std::string rule;
};

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Immutable Cartan, root and weight data for one indecomposable type.
// Simple-root indices exposed by the public API are 1-based.
class RootSystem {
 public:
  explicit RootSystem(RootSystemType type) : type_(type) { build(); }

  const RootSystemType& type() const noexcept { return type_; }
  std::string name() const { return type_.name(); }
  std::size_t rank() const noexcept { return type_.rank; }

  // 0-based entries (i, j) = <alpha_j, alpha_i^vee>.
  const IntMatrix& cartan() const noexcept { return cartan_; }
  Int cartan_determinant() const noexcept { return det_; }
  Int fundamental_group_order() const noexcept { return det_ < 0 ? -det_ : det_; }

  std::span<const Root> positive_roots() const noexcept { return positive_; }
  std::size_t num_positive_roots() const noexcept { return positive_.size(); }
  const Root& simple_root(std::size_t i) const {
    check_index(i);
    return positive_[simple_pos_[i - 1]];
  }

  Weight rho() const { return Weight::rho(rank()); }
  Int coxeter_number() const noexcept { return coxeter_; }
  const Root& highest_short_root() const { return positive_[highest_short_]; }
  const Root& highest_long_root() const { return positive_[highest_long_]; }
  // n_i with alpha_0^vee = sum n_i alpha_i^vee.
  const std::vector<Int>& marks() const noexcept { return positive_[highest_short_].coroot_coords; }
  // J = { i : n_i = 1 }, sorted, 1-based.
  const std::vector<std::size_t>& minuscule_indices() const noexcept { return J_; }
  bool in_J(std::size_t i) const { return std::find(J_.begin(), J_.end(), i) != J_.end(); }
  // Squared length of the simple root alpha_i (shortest roots have length 1).
  int simple_length(std::size_t i) const {
    check_index(i);
    return lengths_[i - 1];
  }

  Int pairing(const Weight& lambda, const Root& alpha) const {
    if (lambda.rank() != rank() || alpha.coroot_coords.size() != rank())
      throw DomainError("pairing: dimension mismatch");
    Int s = 0;
    for (std::size_t k = 0; k < rank(); ++k) s += lambda[k] * alpha.coroot_coords[k];
    return s;
  }

  // Index into positive_roots() of a root given by its weight coordinates,
  // with sign: +k+1 for positive root k, -(k+1) for its negative, nullopt if not a root.
  std::optional<long> signed_root_index(const Weight& w) const {
    if (auto it = by_weight_.find(w); it != by_weight_.end()) return it->second;
    return std::nullopt;
  }
  bool is_positive_root(const Weight& w) const {
    auto s = signed_root_index(w);
    return s && *s > 0;
  }
  bool is_negative_root(const Weight& w) const {
    auto s = signed_root_index(w);
    return s && *s < 0;
  }

  bool in_root_lattice(const Weight& lambda) const {
    check_rank(lambda);
    for (std::size_t i = 0; i < rank(); ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < rank(); ++j) s += adj_(i, j) * lambda[j];
      if (s % det_ != 0) return false;
    }
    return true;
  }

  // Root-basis coordinates of lambda scaled by cartan_determinant();
  // lambda = sum_j (out[j] / det) alpha_j.
  std::vector<Int> scaled_root_coords(const Weight& lambda) const {
    check_rank(lambda);
    std::vector<Int> out(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) out[i] += adj_(i, j) * lambda[j];
    return out;
  }

  // lambda dominant; true iff lambda = varpi_i with i in J.
  bool is_minuscule(const Weight& lambda) const {
    check_rank(lambda);
    if (!lambda.is_dominant()) throw DomainError("is_minuscule: weight is not dominant");
    for (std::size_t i : J_)
      if (lambda == Weight::fundamental(rank(), i)) return true;
    return false;
  }

  PrimeVerdict prime_class(Int p) const {
    if (!is_prime(p)) throw DomainError("prime_class: " + std::to_string(p) + " is not prime");
    const Family f = type_.family;
    if (p == 2 && f != Family::A) return {PrimeClass::bad, "p=2 and R is not of type A_r"};
    if (p == 3 && (f == Family::G || f == Family::F || f == Family::E))
      return {PrimeClass::bad, "p=3 and R is of type G_2, F_4 or E_r"};
    if (p == 5 && f == Family::E && rank() == 8) return {PrimeClass::bad, "p=5 and R is of type E_8"};
    if (f == Family::A && static_cast<Int>(rank() + 1) % p == 0)
      return {PrimeClass::good_not_very_good, "R = A_r and p divides r+1"};
    return {PrimeClass::very_good, "no bad-prime condition applies"};
  }

  void check_rank(const Weight& w) const {
    if (w.rank() != rank())
      throw DomainError("weight of rank " + std::to_string(w.rank()) + " used with " + name());
  }
  void check_index(std::size_t i) const {
    if (i < 1 || i > rank())
      throw DomainError("simple root index " + std::to_string(i) + " out of range for " + name());
  }

 private:
  void build();

  RootSystemType type_;
  IntMatrix cartan_;
  IntMatrix adj_;  // det * cartan^{-1}
  Int det_ = 0;
  std::vector<int> lengths_;
  std::vector<Root> positive_;
  std::vector<std::size_t> simple_pos_;
  std::unordered_map<Weight, long, WeightHash> by_weight_;
  std::size_t highest_short_ = 0;
  std::size_t highest_long_ = 0;
  Int coxeter_ = 0;
  std::vector<std::size_t> J_;
};

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

// det and adjugate (det * inverse) of an integer matrix via exact elimination.
inline std::pair<Int, IntMatrix> det_and_adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    ROOTCOMB_INVARIANT(piv < n, "Cartan matrix is singular");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  ROOTCOMB_INVARIANT(denominator(det) == 1, "determinant not integral");
  const Int d = static_cast<Int>(numerator(det));
  IntMatrix adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = a[i][n + j] * d;
      ROOTCOMB_INVARIANT(denominator(v) == 1, "adjugate not integral");
      adj(i, j) = static_cast<Int>(numerator(v));
    }
  return {d, adj};
}

}  // namespace detail

inline void RootSystem::build() {
  const std::size_t n = rank();
  const DynkinData dyn = dynkin_data(type_.family, n);
  lengths_ = dyn.lengths;

  cartan_ = IntMatrix(n);
  for (std::size_t i = 0; i < n; ++i) cartan_(i, i) = 2;
  for (auto [a, b] : dyn.edges) {
    const std::size_t i = a - 1, j = b - 1;
    cartan_(i, j) = -std::max(1, lengths_[j] / lengths_[i]);
    cartan_(j, i) = -std::max(1, lengths_[i] / lengths_[j]);
  }
  // gram(i, j) = 2 (alpha_i, alpha_j) must be symmetric.
  IntMatrix gram(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = cartan_(i, j) * lengths_[i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ROOTCOMB_INVARIANT(gram(i, j) == gram(j, i), "Cartan data not symmetrizable");

  auto [d, adj] = detail::det_and_adjugate(cartan_);
  det_ = d;
  adj_ = std::move(adj);

  auto weight_of = [&](const std::vector<Int>& c) {
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < n; ++j) s += cartan_(i, j) * c[j];
      w[i] = s;
    }
    return w;
  };

  // Close the simple roots under simple reflections inside R+.
  std::map<std::vector<Int>, std::size_t> seen;
  std::vector<Root> roots;
  for (std::size_t i = 0; i < n; ++i) {
    Root r;
    r.root_coords.assign(n, 0);
    r.root_coords[i] = 1;
    r.base = i + 1;
    seen.emplace(r.root_coords, roots.size());
    roots.push_back(std::move(r));
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      const Weight w = weight_of(roots[head].root_coords);
      if (w[i] == 0) continue;
      std::vector<Int> c = roots[head].root_coords;
      c[i] -= w[i];
      if (std::any_of(c.begin(), c.end(), [](Int x) { return x < 0; })) continue;
      if (seen.count(c)) continue;
      Root r;
      r.root_coords = c;
      r.base = roots[head].base;
      r.conjugator.push_back(i + 1);
      r.conjugator.insert(r.conjugator.end(), roots[head].conjugator.begin(),
                          roots[head].conjugator.end());
      seen.emplace(std::move(c), roots.size());
      roots.push_back(std::move(r));
    }
  }

  const int max_len = *std::max_element(lengths_.begin(), lengths_.end());
  const int min_len = *std::min_element(lengths_.begin(), lengths_.end());
  for (Root& r : roots) {
    Int q = 0;  // 2 (alpha, alpha)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += r.root_coords[i] * r.root_coords[j] * gram(i, j);
    r.coroot_coords.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Int num = 2 * r.root_coords[i] * lengths_[i];
      ROOTCOMB_INVARIANT(num % q == 0, "coroot not integral");
      r.coroot_coords[i] = num / q;
    }
    r.is_long = (q / 2 == max_len);
    r.weight = weight_of(r.root_coords);
    r.height = std::accumulate(r.coroot_coords.begin(), r.coroot_coords.end(), Int{0});
    r.root_height = std::accumulate(r.root_coords.begin(), r.root_coords.end(), Int{0});
  }

  // Fixed enumeration of R+: by root height, then lexicographically.
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.root_height != b.root_height) return a.root_height < b.root_height;
    return a.root_coords < b.root_coords;
  });
  positive_ = std::move(roots);

  simple_pos_.assign(n, 0);
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    const Root& r = positive_[k];
    if (r.root_height == 1)
      for (std::size_t i = 0; i < n; ++i)
        if (r.root_coords[i] == 1) simple_pos_[i] = k;
    by_weight_.emplace(r.weight, static_cast<long>(k) + 1);
    by_weight_.emplace(-r.weight, -(static_cast<long>(k) + 1));
  }

  // Highest short / long roots: the unique dominant root of each length.
  bool have_short = false, have_long = false;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    const Root& r = positive_[k];
    const bool is_short = !r.is_long || max_len == min_len;
    if (is_short && (!have_short || r.root_height > positive_[highest_short_].root_height)) {
      highest_short_ = k;
      have_short = true;
    }
    if (r.is_long && (!have_long || r.root_height > positive_[highest_long_].root_height)) {
      highest_long_ = k;
      have_long = true;
    }
  }
  ROOTCOMB_INVARIANT(positive_[highest_short_].weight.is_dominant(), "alpha_0 not dominant");
  ROOTCOMB_INVARIANT(positive_[highest_long_].weight.is_dominant(), "highest root not dominant");

  Int max_height = 0;
  for (const Root& r : positive_) max_height = std::max(max_height, r.height);
  coxeter_ = positive_[highest_short_].height + 1;
  ROOTCOMB_INVARIANT(max_height + 1 == coxeter_, "h - 1 is not the maximal coroot height");

  for (std::size_t i = 0; i < n; ++i)
    if (positive_[highest_short_].coroot_coords[i] == 1) J_.push_back(i + 1);
}

// Memoized construction; the returned reference stays valid for the process lifetime.
inline const RootSystem& root_system(const RootSystemType& type) {
  static std::mutex mu;
  static std::map<RootSystemType, std::unique_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[type];
  if (!slot) slot = std::make_unique<const RootSystem>(type);
  return *slot;
}

inline const RootSystem& root_system(std::string_view spec) {
  return root_system(RootSystemType::parse(spec));
}

}  // namespace rootcomb
