#pragma once

#include <map>
#include <vector>

#include "premon/premonoid.hpp"

namespace premon {

class NotWeaklyPositive : public Error {
 public:
  NotWeaklyPositive() : Error("premonoid is not weakly positive") {}
};

class NotFactorable : public Error {
 public:
  explicit NotFactorable(Index x)
      : Error("non-unit " + std::to_string(x) + " is not a product of the chosen irreducibles"), witness(x) {}
  Index witness;
};

Bitset quarks(const Premonoid& p);
// Degree-s irreducibles: no a = x1...xk, 2 <= k <= s, with non-units xi < a.
Bitset irreducibles(const Premonoid& p, unsigned s = 2);
// Degree-s atoms: as above with the xi arbitrary non-units.
Bitset atoms(const Premonoid& p, unsigned s = 2);

struct IrreducibleDivisors {
  Bitset irreducibles;  // irreducibles a with a | x (x included when irreducible)
  Bitset atoms;
};
IrreducibleDivisors irreducible_divisors(const Premonoid& p, Index x);

struct IrreducibleReport {
  Bitset quarks;
  std::map<unsigned, Bitset> irreducibles;
  std::map<unsigned, Bitset> atoms;
  // Degree-2 irreducibles grouped by unit orbits U a U (U = preorder units),
  // closed to a partition; each orbit sorted, orbits ordered by first member.
  std::vector<std::vector<Index>> orbits;
};
IrreducibleReport irreducible_report(const Premonoid& p, const std::vector<unsigned>& degrees);

struct GeneratingSet {
  std::vector<Index> reps;  // one smallest-index representative per kept orbit
  // witness[x]: a word over irreducibles in U*reps*U with product x, for
  // every non-unit x (empty vector for units).
  std::vector<std::vector<Index>> witness;
};
GeneratingSet irreducible_generating_set(const Premonoid& p);

}  // namespace premon
