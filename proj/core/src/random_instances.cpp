#include "premon/random_instances.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace premon {

namespace {

bool associative(Index n, const std::vector<Index>& t) {
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
  return true;
}

FiniteMonoid sampled_table(Rng& rng, Index n) {
  for (;;) {
    std::vector<Index> t(static_cast<std::size_t>(n) * n);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        t[x * n + y] = x == 0 ? y : y == 0 ? x : static_cast<Index>(rng.below(n));
    if (associative(n, t)) return FiniteMonoid::load(n, 0, std::move(t));
  }
}

using Map = std::vector<unsigned char>;

// Transformation monoid generated by gens (maps acting on the right:
// (f * g)(p) = g(f(p))), enumerated breadth-first from the identity map.
std::optional<FiniteMonoid> transformation_monoid(const std::vector<Map>& gens, std::size_t points, Index cap) {
  Map id(points);
  for (std::size_t p = 0; p < points; ++p) id[p] = static_cast<unsigned char>(p);
  std::map<Map, Index> index{{id, 0}};
  std::vector<Map> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Map& g : gens) {
      Map h(points);
      for (std::size_t p = 0; p < points; ++p) h[p] = g[elems[i][p]];
      if (index.emplace(h, static_cast<Index>(elems.size())).second) {
        elems.push_back(h);
        if (elems.size() > cap) return std::nullopt;
      }
    }
  const auto n = static_cast<Index>(elems.size());
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Map h(points);
      for (std::size_t p = 0; p < points; ++p) h[p] = elems[b][elems[a][p]];
      t[a * n + b] = index.at(h);
    }
  return FiniteMonoid::load(n, 0, std::move(t));
}

}  // namespace

FiniteMonoid random_monoid(Rng& rng, Index max_n) {
  max_n = std::max<Index>(max_n, 1);
  const Index small = std::min<Index>(max_n, 3);
  if (max_n <= 3 || rng.chance(1, 3)) return sampled_table(rng, static_cast<Index>(rng.between(1, small)));
  for (;;) {
    const std::size_t points = rng.chance(1, 2) ? 3 : 4;
    const std::size_t ngens = rng.chance(1, 2) ? 1 : 2;
    std::vector<Map> gens(ngens, Map(points));
    for (auto& g : gens)
      for (auto& v : g) v = static_cast<unsigned char>(rng.below(points));
    auto m = transformation_monoid(gens, points, max_n);
    if (!m || m->size() < 4) continue;
    return rng.chance(1, 2) ? opposite(*m) : *m;
  }
}

FiniteMonoid random_left_duo_monoid(Rng& rng, Index max_n) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    FiniteMonoid m;
    switch (rng.below(3)) {
      case 0: m = random_monoid(rng, max_n); break;
      case 1: {
        // left-zero band with an identity adjoined: xy = x for x != 1
        const Index n = static_cast<Index>(rng.between(2, std::max<Index>(max_n, 2)));
        std::vector<Index> t(static_cast<std::size_t>(n) * n);
        for (Index x = 0; x < n; ++x)
          for (Index y = 0; y < n; ++y) t[x * n + y] = x == 0 ? y : x;
        m = FiniteMonoid::load(n, 0, std::move(t));
        break;
      }
      default: {
        FiniteMonoid a = random_monoid(rng, 3), b = random_monoid(rng, 2);
        if (a.size() * b.size() > max_n) continue;
        m = direct_product(a, b);
      }
    }
    if (structure_flags(m).left_duo) return m;
  }
  throw Error("no left duo monoid found");
}

PreorderRel random_preorder(Rng& rng, const FiniteMonoid& m, std::string* kind) {
  const Index n = m.size();
  auto say = [&](const char* k) {
    if (kind) *kind = k;
  };
  const auto pick = rng.below(10);
  if (pick < 4) {
    say("divisibility");
    return divisibility_preorder(m);
  }
  if (pick < 6) {
    say("random relation");
    std::vector<Bitset> rel(n, Bitset(n));
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (rng.chance(1, 4)) rel[a].set(b);
    return PreorderRel::closure_of(std::move(rel), PreorderKind::matrix);
  }
  if (pick < 8) {
    say("phi");
    std::vector<Index> a;
    for (Index x = 0; x < n; ++x)
      if (x != m.identity() && rng.chance(1, 2)) a.push_back(x);
    return phi_preorder(m, a).rel;
  }
  if (pick < 9) {
    say("pullback");
    const Index k = static_cast<Index>(rng.between(1, 3));
    std::vector<Bitset> up(k, Bitset(k));
    for (Index a = 0; a < k; ++a)
      for (Index b = a; b < k; ++b) up[a].set(b);
    std::vector<Index> phi(n);
    for (auto& v : phi) v = static_cast<Index>(rng.below(k));
    return pullback_preorder(phi, PreorderRel::trusted(std::move(up), PreorderKind::matrix));
  }
  if (rng.chance(1, 2)) {
    say("total");
    return PreorderRel::total(n);
  }
  say("discrete");
  return PreorderRel::discrete(n);
}

RandomPremonoid random_premonoid(Rng& rng, Index max_n) {
  FiniteMonoid m = random_monoid(rng, max_n);
  std::string kind;
  PreorderRel r = random_preorder(rng, m, &kind);
  RandomPremonoid out{Premonoid(std::move(m), std::move(r)), ""};
  out.description = "random monoid of size " + std::to_string(out.premonoid.size()) + " with " + kind + " preorder";
  return out;
}

}  // namespace premon
