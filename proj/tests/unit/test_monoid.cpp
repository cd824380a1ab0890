#include <doctest.h>

#include "oracles.hpp"
#include "premon/families.hpp"
#include "premon/random_instances.hpp"

using namespace premon;

TEST_CASE("Z/n tables") {
  const FiniteMonoid m = make_zn(6);
  CHECK(m.size() == 6);
  CHECK(m.identity() == 1);
  CHECK(m.mul(2, 3) == 0);
  CHECK(m.mul(5, 5) == 1);
  CHECK(units(m).members() == std::vector<Index>{1, 5});
  CHECK(make_zn(1).size() == 1);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteMonoid::load(2, 0, {0, 1, 1}), ShapeError);
  CHECK_THROWS_AS(FiniteMonoid::load(2, 0, {0, 1, 0, 0}), BadIdentity);
  // Identity 0 with 1*1 = 2, 1*2 = 1, 2*1 = 2, 2*2 = 2 is not associative:
  // (1*1)*1 = 2*1 = 2 but 1*(1*1) = 1*2 = 1.
  CHECK_THROWS_AS(FiniteMonoid::load(3, 0, {0, 1, 2, 1, 2, 1, 2, 2, 2}), NonAssociative);
  try {
    FiniteMonoid::load(3, 0, {0, 1, 2, 1, 2, 1, 2, 2, 2});
  } catch (const NonAssociative& e) {
    REQUIRE(e.witness.size() == 3);
    const auto& w = e.witness;
    const Index t[9] = {0, 1, 2, 1, 2, 1, 2, 2, 2};
    auto mul = [&](Index a, Index b) { return t[a * 3 + b]; };
    CHECK(mul(mul(w[0], w[1]), w[2]) != mul(w[0], mul(w[1], w[2])));
  }
}

TEST_CASE("divisibility against the u,v scan") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const FiniteMonoid m = random_monoid(rng, 6);
    for (Index x = 0; x < m.size(); ++x)
      for (Index y = 0; y < m.size(); ++y) CHECK(divides(m, x, y) == oracle::divides(m, x, y));
  }
}

TEST_CASE("structure flags") {
  const StructureFlags z4 = structure_flags(make_zn(4));
  CHECK(z4.commutative);
  CHECK(z4.dedekind_finite);
  CHECK(z4.duo);
  CHECK_FALSE(z4.unit_cancellative);  // 0 * 2 = 0
  CHECK_FALSE(z4.acyclic);
  const StructureFlags z1 = structure_flags(make_zn(1));
  CHECK(z1.acyclic);
  CHECK(z1.reduced);
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const FiniteMonoid m = random_monoid(rng, 6);
    const StructureFlags f = structure_flags(m);
    CHECK(f.dedekind_finite);  // every finite monoid
    CHECK(f.duo == (f.left_duo && f.right_duo));
    if (f.commutative) CHECK(f.duo);
    const StructureFlags g = structure_flags(opposite(m));
    CHECK(g.left_duo == f.right_duo);
    CHECK(g.right_duo == f.left_duo);
  }
}

TEST_CASE("direct products and submonoids") {
  const FiniteMonoid a = make_zn(2), b = make_zn(3);
  const FiniteMonoid p = direct_product(a, b);
  CHECK(p.size() == 6);
  CHECK(units(p).count() == 2);
  const FiniteMonoid m = make_zn(12);
  for (Index x = 0; x < 12; ++x) {
    const SubmonoidMask k = divisor_closed_closure(m, x);
    CHECK(k.test(x));
    CHECK(k.test(m.identity()));
    // Divisor closed: every divisor of a member is a member.
    k.for_each([&](Index y) { CHECK(divisors(m, y).is_subset_of(k)); });
    const SubmonoidMask g = germ_submonoid(m, x);
    CHECK(divisors(m, x).is_subset_of(g));
    CHECK(g.is_subset_of(k));
    const Submonoid s = submonoid(m, g);
    for (Index i = 0; i < s.monoid.size(); ++i)
      for (Index j = 0; j < s.monoid.size(); ++j)
        CHECK(s.to_parent[s.monoid.mul(i, j)] == m.mul(s.to_parent[i], s.to_parent[j]));
  }
}

TEST_CASE("left duo inclusion on commutative monoids") {
  const FiniteMonoid m = make_zn(8);
  CHECK(duo_inclusion_failure(m, {2, 6, 4}).empty());
  CHECK(duo_inclusion_failure(m, {2, 2, 2, 2}).empty());
}
