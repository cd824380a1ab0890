#include <doctest.h>

#include "premon/presentation.hpp"

using namespace premon;

TEST_CASE("parsing relations") {
  const Presentation p = parse_presentation("xy", "x2=yx2y");
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].first == Letters{0, 0});
  CHECK(p.relations[0].second == Letters{1, 0, 0, 1});
  CHECK_THROWS_AS(parse_presentation("xy", "x2=z"), InputError);
  CHECK_THROWS_AS(parse_presentation("xx", ""), InputError);
  CHECK_THROWS_AS(BoundedCongruence(p, 3), BoundTooSmall);
}

TEST_CASE("free monoid: classes are words, no descending evidence") {
  const BoundedCongruence c(parse_presentation("xy", ""), 4);
  CHECK(c.class_count() == c.word_count());
  CHECK(c.word_count() == 31);
  const PresentationEvidence ev = explore(c);
  CHECK(ev.non_shrinking_chain.classes.size() == 1);
  CHECK(ev.cycles.empty());
}

TEST_CASE("x2 = yx2y") {
  const Presentation p = parse_presentation("xy", "x2=yx2y");
  const BoundedCongruence c8(p, 8);
  CHECK(c8.same_class({0, 0}, {1, 0, 0, 1}));
  CHECK(c8.same_class({1, 1, 0, 0, 1, 1}, {0, 0}));
  CHECK_FALSE(c8.same_class({0}, {1}));
  const PresentationEvidence ev = explore(BoundedCongruence(p, 10));
  CHECK(ev.non_shrinking_chain.classes.size() >= 3);
  CHECK_FALSE(ev.cycles.empty());
  CHECK(ev.label == "bounded evidence, not a certificate");
}
