#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rootcomb {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A root system specifier or rank that does not name a buildable type.
class InvalidType : public Error {
 public:
  using Error::Error;
};

// A well-formed request outside an operation's domain (non-dominant weight,
// level not above the Coxeter number, composite prime, index outside J, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

namespace detail {

[[noreturn]] inline void invariant_failure(const char* expr, const char* file,
                                           int line, const std::string& what) {
  std::fprintf(stderr, "rootcomb: invariant violated: %s (%s) at %s:%d\n",
               what.c_str(), expr, file, line);
  std::abort();
}

}  // namespace detail
}  // namespace rootcomb

// Internal invariants are never compiled out: they guard exactness claims.
#define ROOTCOMB_INVARIANT(cond, what)                                       \
  do {                                                                       \
    if (!(cond))                                                             \
      ::rootcomb::detail::invariant_failure(#cond, __FILE__, __LINE__, what); \
  } while (0)
