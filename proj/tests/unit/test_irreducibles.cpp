#include <doctest.h>

#include "oracles.hpp"
#include "premon/families.hpp"
#include "premon/irreducibles.hpp"
#include "premon/random_instances.hpp"

using namespace premon;

TEST_CASE("irreducibles, atoms and quarks against tuple enumeration") {
  Rng rng(101);
  for (int t = 0; t < 120; ++t) {
    const RandomPremonoid rp = random_premonoid(rng, 6);
    const Premonoid& p = rp.premonoid;
    INFO(rp.description);
    for (unsigned s : {2U, 3U}) {
      CHECK(irreducibles(p, s).members() == oracle::irreducibles(p, s));
      CHECK(atoms(p, s).members() == oracle::atoms(p, s));
    }
    CHECK(quarks(p).members() == oracle::quarks(p));
  }
}

TEST_CASE("degree must be at least two") { CHECK_THROWS_AS(irreducibles(with_divisibility(make_zn(4)), 1), DegreeTooSmall); }

TEST_CASE("atoms of Z/p^n are p times the units") {
  for (Index p : {2U, 3U})
    for (Index n : {2U, 3U}) {
      Index q = 1;
      for (Index i = 0; i < n; ++i) q *= p;
      const Premonoid h = with_divisibility(make_zn(q));
      const FiniteMonoid& m = h.monoid;
      Bitset want(q);
      units(m).for_each([&](Index u) { want.set(m.mul(p, u)); });
      CHECK(atoms(h, 2) == want);
      CHECK(irreducibles(h, 2) == want);
      CHECK(units(m).count() == q / p * (p - 1));
    }
}

TEST_CASE("irreducible generating sets") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const RandomPremonoid rp = random_premonoid(rng, 6);
    const Premonoid& p = rp.premonoid;
    if (!premonoid_flags(p).weakly_positive) continue;
    const GeneratingSet g = irreducible_generating_set(p);
    const Bitset irr = irreducibles(p, 2);
    for (Index x = 0; x < p.size(); ++x) {
      if (oracle::is_unit(p, x)) continue;
      CHECK(pi(p.monoid, g.witness[x]) == x);
      for (Index a : g.witness[x]) CHECK(irr.test(a));
    }
  }
}

TEST_CASE("irreducible divisors") {
  const Premonoid p = with_divisibility(make_zn(12));
  for (Index x = 0; x < 12; ++x) {
    const IrreducibleDivisors d = irreducible_divisors(p, x);
    d.irreducibles.for_each([&](Index a) { CHECK(oracle::divides(p.monoid, a, x)); });
    CHECK(d.atoms.is_subset_of(d.irreducibles));
  }
}
