#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "premon/premonoid.hpp"

namespace premon {

// A word over carrier elements. Ordered by length, then lexicographically.
struct FactorWord {
  std::vector<Index> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const FactorWord&, const FactorWord&) = default;
  friend std::strong_ordering operator<=>(const FactorWord& a, const FactorWord& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    return a.letters <=> b.letters;
  }
};

// Multiset of equivalence classes (each class named by its smallest member),
// as sorted (class, multiplicity) pairs with positive multiplicities.
struct ClassVector {
  std::vector<std::pair<Index, std::uint32_t>> entries;

  std::uint64_t total() const;
  bool is_subset_of(const ClassVector& o) const;  // sub-multiset
  friend bool operator==(const ClassVector&, const ClassVector&) = default;
  friend auto operator<=>(const ClassVector&, const ClassVector&) = default;
};

ClassVector class_vector(const PreorderRel& rel, const FactorWord& w);

// Shuffling preorder: u below v iff some injection matches each letter of u
// to an equivalent letter of v, i.e. class-multiset inclusion.
bool shuffle_leq(const PreorderRel& rel, const FactorWord& u, const FactorWord& v);

Index pi(const FiniteMonoid& m, const FactorWord& w);

}  // namespace premon
