#pragma once

#include <string>

#include "premon/premonoid.hpp"
#include "premon/rng.hpp"

namespace premon {

// Random finite monoid with at most max_n elements (max_n <= 6 is the
// intended range). Sizes up to 3 come from raw table sampling filtered for
// associativity; larger ones are transformation monoids on 3 or 4 points
// generated by random maps, kept when small enough (optionally reversed).
FiniteMonoid random_monoid(Rng& rng, Index max_n = 6);

// A random left duo monoid (commutative ones included).
FiniteMonoid random_left_duo_monoid(Rng& rng, Index max_n = 6);

// Random preorder on the carrier: divisibility, a closed random relation, a
// length preorder from a random generating set, a pullback into a chain, or
// the total/discrete preorder.
PreorderRel random_preorder(Rng& rng, const FiniteMonoid& m, std::string* kind = nullptr);

struct RandomPremonoid {
  Premonoid premonoid;
  std::string description;
};
RandomPremonoid random_premonoid(Rng& rng, Index max_n = 6);

}  // namespace premon
