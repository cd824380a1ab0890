#include <doctest.h>

#include "oracles.hpp"
#include "premon/families.hpp"
#include "premon/io.hpp"
#include "premon/random_instances.hpp"

using namespace premon;

TEST_CASE("closure and classes") {
  std::vector<Bitset> rel(4, Bitset(4));
  rel[0].set(1);
  rel[1].set(2);
  rel[2].set(1);
  const PreorderRel r = PreorderRel::closure_of(rel, PreorderKind::matrix);
  CHECK(r.leq(0, 2));
  CHECK(r.leq(3, 3));
  CHECK_FALSE(r.leq(2, 0));
  CHECK(r.equiv(1, 2));
  CHECK(r.class_of(2) == 1);
  CHECK(r.lt(0, 1));
  CHECK(r.kind() == PreorderKind::matrix);
}

TEST_CASE("strict part is acyclic on random preorders") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const FiniteMonoid m = random_monoid(rng, 6);
    const PreorderRel r = random_preorder(rng, m);
    const Index n = m.size();
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index z = 0; z < n; ++z)
          if (r.leq(x, y) && r.leq(y, z)) CHECK(r.leq(x, z));
    for (Index x = 0; x < n; ++x) CHECK(r.leq(x, x));
    const HeightTable ht = heights(Premonoid(m, r));
    for (Index x = 0; x < n; ++x) CHECK(ht[x] <= n);
  }
}

TEST_CASE("units of Z/4 under divisibility") {
  const Premonoid p = with_divisibility(make_zn(4));
  CHECK(preorder_units(p).members() == std::vector<Index>{1, 3});
  const PremonoidFlags f = premonoid_flags(p);
  CHECK(f.preordered);
  CHECK(f.positive);
  CHECK(f.weakly_positive);
  CHECK(f.artinian);
}

TEST_CASE("pullback and length preorders") {
  const FiniteMonoid m = make_zn(8);
  const PreorderRel chain = PreorderRel::total(1);
  std::vector<Index> phi(8, 0);
  const PreorderRel r = pullback_preorder(phi, chain);
  CHECK(r.equiv(0, 7));
  const PhiPreorder ph = phi_preorder(m, {2});
  CHECK(ph.phi[2] == 1);
  CHECK(ph.phi[4] == 2);
  CHECK(ph.phi[0] == 3);
  CHECK(ph.phi[1] == 0);
  CHECK(ph.rel.lt(2, 4));
  CHECK_THROWS_AS(phi_preorder(m, {1}), Error);
}

TEST_CASE("restriction agrees with native divisibility on divisor-closed submonoids") {
  Rng rng(19);
  for (int t = 0; t < 40; ++t) {
    const FiniteMonoid m = random_monoid(rng, 6);
    const PreorderRel d = divisibility_preorder(m);
    for (Index x = 0; x < m.size(); ++x) {
      const SubmonoidMask k = divisor_closed_closure(m, x);
      const Submonoid s = submonoid(m, k);
      CHECK(restrict(d, k) == divisibility_preorder(s.monoid));
    }
  }
}

TEST_CASE("restricted units are the ambient units inside") {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const RandomPremonoid rp = random_premonoid(rng, 6);
    const Premonoid& p = rp.premonoid;
    std::vector<Index> gens;
    for (Index x = 0; x < p.size(); ++x)
      if (rng.chance(1, 2)) gens.push_back(x);
    const SubmonoidMask k = generated_submonoid(p.monoid, gens);
    const SubPremonoid sp = subpremonoid(p, k);
    std::vector<Index> got;
    preorder_units(sp.premonoid).for_each([&](Index u) { got.push_back(sp.to_parent[u]); });
    std::vector<Index> want;
    for (Index x = 0; x < p.size(); ++x)
      if (k.test(x) && oracle::is_unit(p, x)) want.push_back(x);
    CHECK(got == want);
  }
}

TEST_CASE("the coarse order on the naturals") {
  const Instance inst = load_instance("coarseN:8");
  const PremonoidFlags f = premonoid_flags(inst.premonoid);
  CHECK(f.positive);
  CHECK_FALSE(f.strongly_positive);  // 0 < 1, yet 0+1 and 1+1 are equivalent
  const HeightTable ht = heights(inst.premonoid);
  for (Index x = 0; x < inst.premonoid.size(); ++x) CHECK(ht[x] == (x == inst.find("0") ? 0U : 1U));
}

TEST_CASE("preorder JSON") {
  const FiniteMonoid m = make_zn(4);
  CHECK(preorder_from_json(json{{"kind", "divisibility"}}, m) == divisibility_preorder(m));
  const PreorderRel chain = preorder_from_json(json::parse(R"({"kind":"pullback","phi":[2,0,1,0],"codomain":{"kind":"chain","n":3}})"), m);
  CHECK(chain.leq(1, 2));
  CHECK(chain.leq(2, 0));
  CHECK_FALSE(chain.leq(0, 2));
  CHECK_THROWS_AS(preorder_from_json(json{{"kind", "nope"}}, m), InputError);
}
