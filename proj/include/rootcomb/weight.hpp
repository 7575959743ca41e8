#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rootcomb/errors.hpp"

namespace rootcomb {

using Int = std::int64_t;

// Integral vector in the fundamental-weight basis: coordinate i is <lambda, alpha_i^vee>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<Int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Int> coords) : coords_(coords) {}

  // i-th fundamental weight, 1-based as in the Bourbaki numbering.
  static Weight fundamental(std::size_t rank, std::size_t i) {
    if (i < 1 || i > rank) throw DomainError("fundamental weight index out of range");
    Weight w(rank);
    w.coords_[i - 1] = 1;
    return w;
  }
  static Weight rho(std::size_t rank) { return Weight(std::vector<Int>(rank, 1)); }

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  std::span<const Int> view() const noexcept { return coords_; }

  // 0-based access.
  Int operator[](std::size_t k) const { return coords_[k]; }
  Int& operator[](std::size_t k) { return coords_[k]; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
  }
  bool is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c >= 0; });
  }
  // Restricted for p: dominant with every coordinate below p.
  bool is_restricted(Int p) const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [p](Int c) { return c >= 0 && c < p; });
  }
  Int max_abs() const {
    Int m = 0;
    for (Int c : coords_) m = std::max(m, c < 0 ? -c : c);
    return m;
  }

  Weight& operator+=(const Weight& o) {
    check_same(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  Weight& operator*=(Int s) {
    for (Int& c : coords_) c *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= -1; }
  friend Weight operator*(Int s, Weight a) { return a *= s; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(coords_[k]);
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    return os << '(' << w.to_string() << ')';
  }

 private:
  void check_same(const Weight& o) const {
    if (o.rank() != rank()) throw DomainError("weight rank mismatch");
  }
  std::vector<Int> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int c : w.coords()) {
      h ^= std::hash<Int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Square integer matrix, row-major, acting on column vectors of weight coordinates.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  Int operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.n_ != y.n_) throw DomainError("matrix size mismatch");
    IntMatrix z(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const Int xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += xik * y(k, j);
      }
    return z;
  }

  Weight apply(const Weight& v) const {
    if (v.rank() != n_) throw DomainError("weight rank does not match matrix size");
    Weight out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> a_;
};

}  // namespace rootcomb
