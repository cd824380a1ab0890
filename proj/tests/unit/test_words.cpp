#include <doctest.h>

#include "oracles.hpp"
#include "premon/random_instances.hpp"

using namespace premon;

TEST_CASE("class multiset inclusion agrees with literal injective matching") {
  Rng rng(2024);
  std::size_t agree = 0, below = 0;
  for (int t = 0; t < 10000; ++t) {
    const Index n = static_cast<Index>(rng.between(1, 6));
    const PreorderRel rel = random_preorder(rng, random_monoid(rng, n));
    const Index k = rel.size();
    auto word = [&] {
      std::vector<Index> w(static_cast<std::size_t>(rng.between(0, 7)));
      for (auto& a : w) a = static_cast<Index>(rng.below(k));
      return w;
    };
    const std::vector<Index> u = word(), v = word();
    const bool fast = shuffle_leq(rel, FactorWord{u}, FactorWord{v});
    const bool slow = oracle::shuffle_leq_literal(rel, u, v);
    if (fast == slow) ++agree;
    if (slow) ++below;
  }
  CHECK(agree == 10000);
  CHECK(below > 100);  // the sample exercises both outcomes
}

TEST_CASE("class vectors") {
  std::vector<Bitset> rel(3, Bitset(3));
  rel[1].set(2);
  rel[2].set(1);
  const PreorderRel r = PreorderRel::closure_of(rel, PreorderKind::matrix);
  const ClassVector v = class_vector(r, FactorWord{{2, 0, 1, 2}});
  CHECK(v.entries == std::vector<std::pair<Index, std::uint32_t>>{{0, 1}, {1, 3}});
  CHECK(v.total() == 4);
  CHECK(class_vector(r, FactorWord{{1}}).is_subset_of(v));
  CHECK_FALSE(v.is_subset_of(class_vector(r, FactorWord{{1}})));
}
