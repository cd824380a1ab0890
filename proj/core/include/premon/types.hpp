#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace premon {

// Dense element index into a finite carrier (or into a finite window of a
// locally finite monoid).
using Index = std::uint32_t;

// Marks a product that leaves a finite window.
inline constexpr Index kAbsent = std::numeric_limits<Index>::max();

// Base of every error the library throws on bad input or unmet preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NonAssociative : public Error {
 public:
  NonAssociative(Index x, Index y, Index z)
      : Error("table is not associative: (x*y)*z != x*(y*z) for x=" + std::to_string(x) +
              ", y=" + std::to_string(y) + ", z=" + std::to_string(z)),
        witness{x, y, z} {}
  std::vector<Index> witness;
};

class BadIdentity : public Error {
 public:
  explicit BadIdentity(Index x)
      : Error("identity law fails at element " + std::to_string(x)), witness(x) {}
  Index witness;
};

class NotComputable : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  explicit DegreeTooSmall(unsigned s)
      : Error("degree must be at least 2, got " + std::to_string(s)) {}
};

// Malformed instance specifications and input files.
class InputError : public Error {
 public:
  using Error::Error;
};

// Queries naming elements that do not exist or cannot be answered.
class QueryError : public Error {
 public:
  using Error::Error;
};

}  // namespace premon
