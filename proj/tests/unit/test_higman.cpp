#include <doctest.h>

#include "premon/higman.hpp"
#include "premon/rng.hpp"

using namespace premon;

TEST_CASE("scattered subwords") {
  CHECK(scattered_subword({0, 1}, {1, 0, 2, 1}) == std::vector<std::size_t>{1, 3});
  CHECK_FALSE(scattered_subword({1, 1, 1}, {1, 0, 1}).has_value());
  CHECK(scattered_subword({}, {0}).has_value());
}

TEST_CASE("embedding up to a preorder") {
  const PreorderRel total = PreorderRel::total(2);
  CHECK(embeds({0, 0, 0}, {1, 1, 1}, total).has_value());
  CHECK_FALSE(embeds({0, 0, 0}, {1, 1, 1}, PreorderRel::discrete(2)).has_value());
}

TEST_CASE("unary bad sequences from a word of length three") {
  const auto seq = longest_bad_sequence(1, {0, 0, 0}, 3);
  CHECK(seq.size() == 4);
  CHECK(seq.back().empty());
}

TEST_CASE("random sequences always contain an embedding pair") {
  Rng rng(12);
  const PreorderRel eq = PreorderRel::discrete(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<Word> ws(200);
    for (auto& w : ws) {
      w.resize(static_cast<std::size_t>(rng.between(0, 8)));
      for (auto& a : w) a = static_cast<Index>(rng.below(3));
    }
    const auto hit = erdos_rado_scan(ws, eq);
    REQUIRE(hit.has_value());
    CHECK(hit->i < hit->j);
    CHECK(scattered_subword(ws[hit->i], ws[hit->j]).has_value());
  }
}
