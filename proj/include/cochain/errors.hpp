#pragma once

#include <stdexcept>
#include <string>

namespace cochain {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ContainmentError : Error { using Error::Error; };
struct ModelError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct GradingError : Error { using Error::Error; };
struct OrderError : Error { using Error::Error; };

/// d(n+1)·d(n) != 0, or a map fails to commute with differentials.
struct NotAComplexError : Error {
  int degree;
  NotAComplexError(const std::string& what, int deg) : Error(what), degree(deg) {}
};

/// Structural invariant violated; `invariant` names it.
struct ValidationError : Error {
  std::string invariant;
  ValidationError(const std::string& inv, const std::string& what)
      : Error(inv + ": " + what), invariant(inv) {}
};

/// Malformed input document; `pointer` is a JSON pointer into it.
struct InputError : Error {
  std::string pointer;
  InputError(const std::string& ptr, const std::string& what)
      : Error((ptr.empty() ? std::string("/") : ptr) + ": " + what), pointer(ptr) {}
};

}  // namespace cochain
