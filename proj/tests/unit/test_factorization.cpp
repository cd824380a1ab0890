#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "premon/classification.hpp"
#include "premon/families.hpp"
#include "premon/random_instances.hpp"
#include "premon/verify.hpp"

using namespace premon;

namespace {

std::set<std::size_t> upto(const LengthSet& s, std::size_t bound) {
  std::set<std::size_t> out;
  for (auto k : s.members_upto(bound)) out.insert(static_cast<std::size_t>(k));
  return out;
}

}  // namespace

TEST_CASE("Z/p^n: lengths, minimal classes and classification") {
  for (Index p : {2U, 3U})
    for (Index n : {2U, 3U}) {
      Index q = 1;
      for (Index i = 0; i < n; ++i) q *= p;
      const FactorizationEngine e(with_divisibility(make_zn(q)));
      const LengthSet l = e.length_set(0);
      CHECK(l == LengthSet::periodic({}, n, 1, {0}));
      const MinimalResult r = e.minimal(0);
      CHECK(r.certified);
      REQUIRE(r.classes.size() == 1);
      CHECK(r.classes[0].vector.total() == n);
      const ClassificationReport c = classify(e);
      CHECK(c[Property::umf_atomic].holds);
      CHECK_FALSE(c[Property::bf_atomic].holds);
      CHECK(c[Property::bf_atomic].witness == 0);
    }
}

TEST_CASE("length sets against word enumeration") {
  Rng rng(31);
  for (int t = 0; t < 80; ++t) {
    const RandomPremonoid rp = random_premonoid(rng, 5);
    const Premonoid& p = rp.premonoid;
    INFO(rp.description);
    const FactorizationEngine e(p);
    for (Alphabet a : {Alphabet::irreducibles, Alphabet::atoms}) {
      const std::vector<Index> letters = e.letters(a).members();
      const std::size_t bound = letters.size() <= 3 ? 7 : 5;
      for (Index x = 0; x < p.size(); ++x)
        CHECK(upto(e.length_set(x, a), bound) == oracle::lengths(p, letters, x, bound));
    }
  }
}

TEST_CASE("minimal classes against literal shuffle-minimality") {
  Rng rng(37);
  for (int t = 0; t < 60; ++t) {
    const RandomPremonoid rp = random_premonoid(rng, 5);
    const Premonoid& p = rp.premonoid;
    INFO(rp.description);
    const FactorizationEngine e(p);
    const std::vector<Index> letters = e.letters(Alphabet::irreducibles).members();
    const std::size_t bound = p.size() + 1;
    if (std::pow(static_cast<double>(letters.size()), static_cast<double>(bound)) > 2e5) continue;
    e.non_units().for_each([&](Index x) {
      std::set<ClassVector> fast;
      for (const auto& c : e.minimal(x).classes) fast.insert(c.vector);
      CHECK(fast == oracle::minimal_classes(p, letters, x, bound));
    });
  }
}

TEST_CASE("enumeration is complete and ordered") {
  const Premonoid p = with_divisibility(make_zn(12));
  const FactorizationEngine e(p);
  const std::vector<Index> letters = e.letters(Alphabet::irreducibles).members();
  for (Index x = 0; x < 12; ++x) {
    const auto words = e.factorizations(x, 4);
    CHECK(std::is_sorted(words.begin(), words.end()));
    std::set<std::vector<Index>> got;
    for (const auto& w : words) got.insert(w.letters);
    const auto want = oracle::words_with_product(p, letters, x, 4);
    CHECK(got == std::set<std::vector<Index>>(want.begin(), want.end()));
  }
}

TEST_CASE("units have no factorizations") {
  const FactorizationEngine e(with_divisibility(make_zn(4)));
  CHECK(e.length_set(3).empty());
  CHECK(e.factorizations(3, 5).empty());
  CHECK(e.minimal(3).classes.empty());
  CHECK(e.factorizations(2, 5).size() == 1);
}

TEST_CASE("atomic readings") {
  // In the coarse naturals every positive integer is irreducible but only 1 is
  // an atom; 3 = 1 + 1 + 1 is its only atomic factorization.
  const Instance inst = load_instance("coarseN:6");
  const FactorizationEngine e(inst.premonoid);
  const Index three = inst.find("3");
  const MinimalResult all = e.minimal(three, AtomicMode::none);
  const MinimalResult within = e.minimal(three, AtomicMode::within_atomic);
  const MinimalResult paper = e.minimal(three, AtomicMode::paper_literal);
  CHECK(within.classes.size() == 1);
  CHECK(within.classes[0].vector.total() == 3);
  // Minimal over all irreducibles, the word (3) is shuffle-below (1, 1, 1)
  // because all positive integers are equivalent, so no atom word survives.
  CHECK(all.classes.size() == 1);
  CHECK(all.classes[0].vector.total() == 1);
  CHECK(paper.classes.empty());
}

TEST_CASE("height bound and brute-force certification on random premonoids") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const RandomPremonoid rp = random_premonoid(rng, 6);
    INFO(rp.description);
    const FactorizationEngine e(rp.premonoid);
    CHECK(check_height_bound(e, 2).status == Check::Status::pass);
    CHECK(check_height_bound(e, 3).status == Check::Status::pass);
    CHECK(check_minimal_brute_force(e).status != Check::Status::fail);
  }
}

TEST_CASE("layer sequences are eventually periodic") {
  const FiniteMonoid m = make_zn(8);
  const LayerSequence s = layer_sequence(m, Bitset::from_members(8, {2, 6}), 100);
  CHECK(s.at(1).members() == std::vector<Index>{2, 6});
  CHECK(s.at(2).members() == std::vector<Index>{4});
  CHECK(s.at(3).members() == std::vector<Index>{0});
  CHECK(s.at(1000).members() == std::vector<Index>{0});
}
