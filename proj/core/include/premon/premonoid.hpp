#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "premon/finite_monoid.hpp"
#include "premon/preorder.hpp"

namespace premon {

// A monoid paired with a preorder on the same carrier. No compatibility
// between the two is assumed.
struct Premonoid {
  FiniteMonoid monoid;
  PreorderRel rel;

  Premonoid() = default;
  Premonoid(FiniteMonoid m, PreorderRel r);

  Index size() const { return monoid.size(); }
};

Premonoid with_divisibility(FiniteMonoid m);

// The subpremonoid on mask (restricted preorder), densely re-indexed.
struct SubPremonoid {
  Premonoid premonoid;
  std::vector<Index> to_parent;
  std::vector<Index> from_parent;
};
SubPremonoid subpremonoid(const Premonoid& p, const SubmonoidMask& mask);

Bitset preorder_units(const Premonoid& p);
Bitset preorder_non_units(const Premonoid& p);

// ht(x): number of elements of the longest chain x = x1 > x2 > ... of
// non-units; 0 for units.
using HeightTable = std::vector<std::uint32_t>;
HeightTable heights(const Premonoid& p);

struct PremonoidFlags {
  bool preordered = false;
  bool strongly_preordered = false;
  bool positive = false;
  bool strongly_positive = false;
  bool weakly_positive = false;
  bool artinian = true;
  bool strongly_artinian = true;
  std::string artinian_reason = "finite carrier";
};
PremonoidFlags premonoid_flags(const Premonoid& p);

// Image of a premonoid under a bijection of the carrier: perm[x] is the new
// index of x. The result is isomorphic to p.
Premonoid relabel(const Premonoid& p, const std::vector<Index>& perm);

}  // namespace premon
