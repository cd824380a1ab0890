#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "premon/bitset.hpp"
#include "premon/types.hpp"

namespace premon {

struct LoadOptions {
  // Associativity is O(n^3); callers loading tables that are associative by
  // construction may skip it above 256 elements.
  bool skip_associativity_above_256 = false;
};

// A monoid on the carrier 0..n-1 given by its full Cayley table. The same
// type also represents a finite *window* of a locally finite monoid: a
// down-closed set of divisors where products leaving the window are kAbsent.
class FiniteMonoid {
 public:
  FiniteMonoid() = default;

  // Validating constructor. Throws ShapeError, BadIdentity or NonAssociative.
  static FiniteMonoid load(std::size_t n, Index identity, std::vector<Index> table,
                           LoadOptions opts = {});
  static FiniteMonoid from_rows(const std::vector<std::vector<Index>>& rows, Index identity,
                                LoadOptions opts = {});

  // Partial table for windows: kAbsent entries allowed, identity law required,
  // associativity checked on every triple where all four products exist.
  static FiniteMonoid window(std::size_t n, Index identity, std::vector<Index> table);

  Index size() const { return n_; }
  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  bool complete() const { return complete_; }
  const std::vector<Index>& table() const { return table_; }

  // Human-readable element names; defaults to the decimal index.
  const std::string& label(Index x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  // Looks an element up by label, then by decimal index. Returns kAbsent.
  Index find(const std::string& text) const;

 private:
  Index n_ = 0;
  Index identity_ = 0;
  bool complete_ = true;
  std::vector<Index> table_;
  std::vector<std::string> labels_;
};

// Membership mask over a carrier; closed under the (defined) products and
// containing the identity when produced by the closure operations below.
using SubmonoidMask = Bitset;

struct StructureFlags {
  bool commutative = true;
  bool dedekind_finite = true;
  bool unit_cancellative = true;
  bool acyclic = true;
  bool left_duo = true;
  bool right_duo = true;
  bool duo = true;
  bool reduced = true;
};

// A submonoid re-indexed densely; to_parent is increasing.
struct Submonoid {
  FiniteMonoid monoid;
  std::vector<Index> to_parent;
  std::vector<Index> from_parent;  // kAbsent outside the mask
};

Index pi(const FiniteMonoid& m, const std::vector<Index>& word);  // kAbsent if undefined

Bitset units(const FiniteMonoid& m);
Bitset left_multiples(const FiniteMonoid& m, Index x);   // Hx
Bitset right_multiples(const FiniteMonoid& m, Index x);  // xH
Bitset two_sided_ideal(const FiniteMonoid& m, Index x);  // HxH
bool divides(const FiniteMonoid& m, Index x, Index y);
// rows[x] = HxH, i.e. the set of y with x | y.
std::vector<Bitset> divisibility_rows(const FiniteMonoid& m);
Bitset divisors(const FiniteMonoid& m, Index x);

Bitset product_closure(const FiniteMonoid& m, Bitset s);  // adds identity
SubmonoidMask generated_submonoid(const FiniteMonoid& m, const std::vector<Index>& xs);
SubmonoidMask divisor_closed_closure(const FiniteMonoid& m, Index x);
SubmonoidMask germ_submonoid(const FiniteMonoid& m, Index x);

Submonoid submonoid(const FiniteMonoid& m, const SubmonoidMask& mask);

StructureFlags structure_flags(const FiniteMonoid& m);

// Unit-removal lemma instance check; requires Q*Q within Q.
bool unit_removal_holds(const FiniteMonoid& m, const Bitset& q, const Bitset& a);

// Setwise product of element sets (undefined products dropped).
Bitset set_product(const FiniteMonoid& m, const Bitset& a, const Bitset& b);

// Left-duo inclusion H x1 H ... H xn H within H x_s1 ... x_sm for every
// increasing selection s. Returns the first failing selection (as 0-based
// positions), or an empty vector when all hold.
std::vector<std::size_t> duo_inclusion_failure(const FiniteMonoid& m, const std::vector<Index>& xs);

FiniteMonoid opposite(const FiniteMonoid& m);
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

}  // namespace premon
