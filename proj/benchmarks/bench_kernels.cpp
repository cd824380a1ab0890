// Hot kernels: shuffling-preorder comparison, classification, minimal-class
// search, Smith normal form, bounded congruence closure, window building.

#include <benchmark/benchmark.h>

#include "premon/classification.hpp"
#include "premon/families.hpp"
#include "premon/presentation.hpp"
#include "premon/random_instances.hpp"
#include "premon/snf.hpp"
#include "premon/words.hpp"

using namespace premon;

namespace {

void BM_ShuffleLeq(benchmark::State& st) {
  Rng rng(1);
  const PreorderRel rel = random_preorder(rng, random_monoid(rng, 6));
  std::vector<std::pair<FactorWord, FactorWord>> pairs;
  for (int i = 0; i < 256; ++i) {
    auto word = [&] {
      std::vector<Index> w(static_cast<std::size_t>(st.range(0)));
      for (auto& a : w) a = static_cast<Index>(rng.below(6));
      return FactorWord{w};
    };
    pairs.emplace_back(word(), word());
  }
  std::size_t i = 0;
  for (auto _ : st) {
    const auto& [u, v] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(shuffle_leq(rel, u, v));
  }
}
BENCHMARK(BM_ShuffleLeq)->Arg(4)->Arg(7)->Arg(16);

void BM_ClassifyZn(benchmark::State& st) {
  const Premonoid p = with_divisibility(make_zn(static_cast<Index>(st.range(0))));
  for (auto _ : st) {
    const FactorizationEngine e(p);
    benchmark::DoNotOptimize(classify(e));
  }
}
BENCHMARK(BM_ClassifyZn)->Arg(8)->Arg(27)->Arg(64);

void BM_ClassifyRandom(benchmark::State& st) {
  Rng rng(7);
  std::vector<Premonoid> ps;
  for (int i = 0; i < 32; ++i) ps.push_back(random_premonoid(rng, 6).premonoid);
  std::size_t i = 0;
  for (auto _ : st) {
    const FactorizationEngine e(ps[i++ % ps.size()]);
    benchmark::DoNotOptimize(classify(e));
  }
}
BENCHMARK(BM_ClassifyRandom);

void BM_MinimalZero(benchmark::State& st) {
  const Premonoid p = with_divisibility(make_zn(static_cast<Index>(st.range(0))));
  for (auto _ : st) {
    const FactorizationEngine e(p);
    benchmark::DoNotOptimize(e.minimal(0));
  }
}
BENCHMARK(BM_MinimalZero)->Arg(16)->Arg(81);

void BM_Snf(benchmark::State& st) {
  Rng rng(3);
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  std::vector<IntMatrix> ms;
  while (ms.size() < 64) {
    IntMatrix a(n, std::vector<std::int64_t>(n));
    for (auto& row : a)
      for (auto& v : row) v = rng.between(-20, 20);
    if (determinant(a) != 0) ms.push_back(std::move(a));
  }
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(snf(ms[i++ % ms.size()]));
}
BENCHMARK(BM_Snf)->Arg(2)->Arg(4);

void BM_BoundedCongruence(benchmark::State& st) {
  const Presentation pr = parse_presentation("xy", "x2=yx2y");
  for (auto _ : st) {
    const BoundedCongruence c(pr, static_cast<std::size_t>(st.range(0)));
    benchmark::DoNotOptimize(c.class_count());
  }
}
BENCHMARK(BM_BoundedCongruence)->Arg(8)->Arg(10)->Arg(12);

void BM_PowerWindow(benchmark::State& st) {
  const PowerMonoid pm(make_zn(static_cast<Index>(st.range(0))));
  for (auto _ : st) {
    const Window w = build_window(pm, pm.default_roots());
    benchmark::DoNotOptimize(w.elements.size());
  }
}
BENCHMARK(BM_PowerWindow)->Arg(2)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
