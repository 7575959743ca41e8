#pragma once

// Integer formulas used by the golden tables ("r+1", "2^(r-1)", "binom(r+1,i)", "(l-1)/2").
// Grammar: sum := term (('+'|'-') term)*; term := power (('*'|'/') power)*;
// power := unary ('^' power)?; unary := '-' unary | atom;
// atom := integer | variable | 'binom(' sum ',' sum ')' | '(' sum ')'.
// Division must be exact; anything else is an error.

#include <cctype>
#include <limits>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rootcomb/errors.hpp"

namespace rootcomb::table_expr {

using BigInt = boost::multiprecision::cpp_int;
using Bindings = std::map<std::string, long long>;

class ExprError : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public ExprError {
 public:
  using ExprError::ExprError;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view src, const Bindings& vars) : src_(src), vars_(vars) {}

  BigInt parse() {
    BigInt v = sum();
    skip();
    if (pos_ != src_.size()) fail("trailing input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ExprError("formula '" + std::string(src_) + "': " + why + " at offset " +
                    std::to_string(pos_));
  }

  BigInt sum() {
    BigInt v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  BigInt term() {
    BigInt v = power();
    for (;;) {
      if (eat('*')) {
        v *= power();
      } else if (eat('/')) {
        const BigInt d = power();
        if (d == 0) fail("division by zero");
        if (v % d != 0)
          throw InexactDivision("formula '" + std::string(src_) + "': inexact division");
        v /= d;
      } else {
        return v;
      }
    }
  }
  BigInt power() {
    BigInt base = unary();
    if (!eat('^')) return base;
    const BigInt e = power();
    if (e < 0) fail("negative exponent");
    BigInt r = 1;
    for (BigInt k = 0; k < e; ++k) r *= base;
    return r;
  }
  BigInt unary() {
    if (eat('-')) return -unary();
    return atom();
  }
  BigInt atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        v = v * 10 + (src_[pos_++] - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
        name += src_[pos_++];
      if (name == "binom") {
        if (!eat('(')) fail("expected '(' after binom");
        const BigInt n = sum();
        if (!eat(',')) fail("expected ','");
        const BigInt k = sum();
        if (!eat(')')) fail("expected ')'");
        if (k < 0 || k > n) return 0;
        BigInt r = 1;
        for (BigInt j = 1; j <= k; ++j) r = r * (n - k + j) / j;
        return r;
      }
      auto it = vars_.find(name);
      if (it == vars_.end()) fail("unbound variable '" + name + "'");
      return BigInt(it->second);
    }
    if (eat('(')) {
      BigInt v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline BigInt evaluate(std::string_view formula, const Bindings& vars) {
  return detail::Parser(formula, vars).parse();
}

inline long long evaluate_int(std::string_view formula, const Bindings& vars) {
  const BigInt v = evaluate(formula, vars);
  if (v > BigInt(std::numeric_limits<long long>::max()) ||
      v < BigInt(std::numeric_limits<long long>::min()))
    throw ExprError("formula '" + std::string(formula) + "' overflows a 64-bit integer");
  return static_cast<long long>(v);
}

// Like evaluate_int, but returns false when the formula has no integer value.
inline bool try_evaluate_int(std::string_view formula, const Bindings& vars, long long& out) {
  try {
    out = evaluate_int(formula, vars);
    return true;
  } catch (const InexactDivision&) {
    return false;
  }
}

}  // namespace rootcomb::table_expr
