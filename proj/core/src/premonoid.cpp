#include "premon/premonoid.hpp"

#include <algorithm>
#include <numeric>

namespace premon {

Premonoid::Premonoid(FiniteMonoid m, PreorderRel r) : monoid(std::move(m)), rel(std::move(r)) {
  if (monoid.size() != rel.size()) throw ShapeError("preorder carrier does not match the monoid");
}

Premonoid with_divisibility(FiniteMonoid m) {
  PreorderRel r = divisibility_preorder(m);
  return Premonoid(std::move(m), std::move(r));
}

SubPremonoid subpremonoid(const Premonoid& p, const SubmonoidMask& mask) {
  Submonoid s = submonoid(p.monoid, mask);
  SubPremonoid out;
  out.premonoid = Premonoid(std::move(s.monoid), restrict(p.rel, mask));
  out.to_parent = std::move(s.to_parent);
  out.from_parent = std::move(s.from_parent);
  return out;
}

Bitset preorder_units(const Premonoid& p) {
  Bitset u = p.rel.up(p.monoid.identity());
  u &= p.rel.down(p.monoid.identity());
  return u;
}

Bitset preorder_non_units(const Premonoid& p) {
  Bitset nu(p.size());
  nu.set_all();
  nu.subtract(preorder_units(p));
  return nu;
}

HeightTable heights(const Premonoid& p) {
  const Index n = p.size();
  const Bitset nu = preorder_non_units(p);
  // y < x implies down(y) is a proper subset of down(x): sort by its size.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<std::size_t> dsize(n);
  for (Index x = 0; x < n; ++x) dsize[x] = p.rel.down(x).count();
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return dsize[a] < dsize[b]; });
  HeightTable ht(n, 0);
  for (Index x : order) {
    if (!nu.test(x)) continue;
    std::uint32_t best = 0;
    Bitset below = p.rel.down(x);
    below &= nu;
    below.for_each([&](Index y) {
      if (!p.rel.leq(x, y)) best = std::max(best, ht[y]);
    });
    ht[x] = best + 1;
  }
  return ht;
}

PremonoidFlags premonoid_flags(const Premonoid& p) {
  const Index n = p.size();
  const FiniteMonoid& m = p.monoid;
  const PreorderRel& r = p.rel;
  PremonoidFlags f;
  bool pre = true, strong = true;
  for (Index x = 0; x < n && (pre || strong); ++x)
    r.up(x).for_each([&](Index y) {
      if (!pre && !strong) return;
      const bool strict = !r.leq(y, x);
      for (Index u = 0; u < n; ++u) {
        const Index pairs[2][2] = {{m.mul(u, x), m.mul(u, y)}, {m.mul(x, u), m.mul(y, u)}};
        for (const auto& pr : pairs) {
          if (pr[0] == kAbsent || pr[1] == kAbsent) continue;
          if (!r.leq(pr[0], pr[1])) pre = false;
          else if (strict && r.leq(pr[1], pr[0])) strong = false;
        }
      }
    });
  f.preordered = pre;
  f.strongly_preordered = pre && strong;
  const bool one_below_all = r.up(m.identity()).count() == n;
  f.positive = f.preordered && one_below_all;
  f.strongly_positive = f.strongly_preordered && one_below_all;
  const std::vector<Index> us = preorder_units(p).members();
  bool weak = true;
  for (Index x = 0; x < n && weak; ++x) {
    if (!two_sided_ideal(m, x).is_subset_of(r.up(x))) weak = false;
    for (Index u : us) {
      if (!weak) break;
      const Index ux = m.mul(u, x);
      if (ux == kAbsent) continue;
      for (Index v : us) {
        const Index uxv = m.mul(ux, v);
        if (uxv != kAbsent && !r.leq(uxv, x)) {
          weak = false;
          break;
        }
      }
    }
  }
  f.weakly_positive = weak;
  return f;
}

Premonoid relabel(const Premonoid& p, const std::vector<Index>& perm) {
  const Index n = p.size();
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index v = p.monoid.mul(a, b);
      t[static_cast<std::size_t>(perm[a]) * n + perm[b]] = v == kAbsent ? kAbsent : perm[v];
    }
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (p.rel.leq(a, b)) rel[perm[a]].set(perm[b]);
  FiniteMonoid m = p.monoid.complete() ? FiniteMonoid::load(n, perm[p.monoid.identity()], std::move(t))
                                       : FiniteMonoid::window(n, perm[p.monoid.identity()], std::move(t));
  return Premonoid(std::move(m), PreorderRel::trusted(std::move(rel), p.rel.kind()));
}

}  // namespace premon
