#include <doctest.h>

#include "premon/families.hpp"
#include "premon/random_instances.hpp"
#include "premon/verify.hpp"

using namespace premon;

TEST_CASE("built-in instances pass every check") {
  for (const auto& s : builtin_specs()) {
    INFO(s);
    const Instance inst = load_instance(s);
    VerifyOptions o;
    o.window = inst.is_window();
    o.heights_exact = inst.heights_exact;
    const VerifyReport r = verify_suite(inst.premonoid, o);
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.status != Check::Status::fail);
    }
  }
}

TEST_CASE("localization on random premonoids") {
  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    const RandomPremonoid rp = random_premonoid(rng, 6);
    INFO(rp.description);
    const Premonoid& p = rp.premonoid;
    const Index x = static_cast<Index>(rng.below(p.size()));
    const Check c = check_localization(p, x);
    INFO(c.detail);
    CHECK(c.status == Check::Status::pass);
  }
}

TEST_CASE("left duo monoids satisfy the inclusion") {
  Rng rng(88);
  for (int t = 0; t < 25; ++t) {
    const FiniteMonoid m = random_left_duo_monoid(rng, 6);
    REQUIRE(structure_flags(m).left_duo);
    CHECK(check_duo_inclusion(m, 1).status == Check::Status::pass);
  }
}

TEST_CASE("skipped checks say why") {
  // A left-zero band with identity is left duo; its opposite is not.
  const FiniteMonoid m = FiniteMonoid::from_rows({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  CHECK(structure_flags(m).left_duo);
  CHECK(check_duo_inclusion(m, 1).status == Check::Status::pass);
  const Check c = check_duo_inclusion(opposite(m), 1);
  CHECK(c.status == Check::Status::skipped);
  CHECK(c.detail == "not left duo");
}

TEST_CASE("brute-force minimal vectors") {
  const Premonoid p = with_divisibility(make_zn(8));
  std::size_t longest = 0;
  const auto v = brute_force_minimal_vectors(p, Bitset::from_members(8, {2, 6}), 0, 10, &longest);
  CHECK(v.size() == 1);
  CHECK(longest == 3);
}
