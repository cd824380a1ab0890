#include "premon/irreducibles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace premon {

namespace {

// True iff a = x1...xk for some 2 <= k <= s with every xi in d.
bool decomposes(const FiniteMonoid& m, Index a, const Bitset& d, unsigned s) {
  Bitset layer = d;
  for (unsigned k = 2; k <= s; ++k) {
    layer = set_product(m, layer, d);
    if (layer.test(a)) return true;
    if (layer.none()) return false;
  }
  return false;
}

Bitset strictly_below_non_units(const Premonoid& p, Index a, const Bitset& nu) {
  Bitset d = p.rel.down(a);
  d &= nu;
  d.subtract(p.rel.up(a));
  return d;
}

void check_degree(unsigned s) {
  if (s < 2) throw DegreeTooSmall(s);
}

}  // namespace

Bitset quarks(const Premonoid& p) {
  const Bitset nu = preorder_non_units(p);
  Bitset out(p.size());
  nu.for_each([&](Index a) {
    if (strictly_below_non_units(p, a, nu).none()) out.set(a);
  });
  return out;
}

Bitset irreducibles(const Premonoid& p, unsigned s) {
  check_degree(s);
  const Bitset nu = preorder_non_units(p);
  Bitset out(p.size());
  nu.for_each([&](Index a) {
    if (!decomposes(p.monoid, a, strictly_below_non_units(p, a, nu), s)) out.set(a);
  });
  return out;
}

Bitset atoms(const Premonoid& p, unsigned s) {
  check_degree(s);
  const Bitset nu = preorder_non_units(p);
  Bitset products(p.size());
  Bitset layer = nu;
  for (unsigned k = 2; k <= s; ++k) {
    layer = set_product(p.monoid, layer, nu);
    const bool grew = !layer.is_subset_of(products);
    products |= layer;
    if (!grew) break;  // layers are now inside the union; further ones add nothing new
  }
  Bitset out = nu;
  out.subtract(products);
  return out;
}

IrreducibleDivisors irreducible_divisors(const Premonoid& p, Index x) {
  const Bitset div = divisors(p.monoid, x);
  IrreducibleDivisors out{irreducibles(p), atoms(p)};
  out.irreducibles &= div;
  out.atoms &= div;
  return out;
}

IrreducibleReport irreducible_report(const Premonoid& p, const std::vector<unsigned>& degrees) {
  IrreducibleReport r;
  r.quarks = quarks(p);
  for (unsigned s : degrees) {
    r.irreducibles.emplace(s, irreducibles(p, s));
    r.atoms.emplace(s, atoms(p, s));
  }
  const Bitset irr = r.irreducibles.count(2) ? r.irreducibles.at(2) : irreducibles(p, 2);
  const Index n = p.size();
  const std::vector<Index> us = preorder_units(p).members();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  irr.for_each([&](Index a) {
    for (Index u : us) {
      const Index ua = p.monoid.mul(u, a);
      if (ua == kAbsent) continue;
      for (Index v : us) {
        const Index b = p.monoid.mul(ua, v);
        if (b != kAbsent && irr.test(b)) {
          const Index ra = find(a), rb = find(b);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }
  });
  std::map<Index, std::vector<Index>> groups;
  irr.for_each([&](Index a) { groups[find(a)].push_back(a); });
  for (auto& [root, members] : groups) r.orbits.push_back(std::move(members));
  std::sort(r.orbits.begin(), r.orbits.end());
  return r;
}

GeneratingSet irreducible_generating_set(const Premonoid& p) {
  if (!premonoid_flags(p).weakly_positive) throw NotWeaklyPositive();
  const FiniteMonoid& m = p.monoid;
  const IrreducibleReport rep = irreducible_report(p, {2});
  const Bitset& irr = rep.irreducibles.at(2);
  const Bitset nu = preorder_non_units(p);
  const Bitset us = preorder_units(p);

  auto letters_for = [&](const std::vector<Index>& reps) {
    Bitset core = Bitset::from_members(p.size(), reps);
    Bitset letters = set_product(m, set_product(m, us, core), us);
    letters &= irr;
    return letters;
  };
  auto uncovered = [&](const std::vector<Index>& reps) -> Index {
    const Bitset gen = product_closure(m, letters_for(reps));
    Index bad = kAbsent;
    nu.for_each([&](Index x) {
      if (bad == kAbsent && !gen.test(x)) bad = x;
    });
    return bad;
  };

  std::vector<Index> reps;
  for (const auto& orbit : rep.orbits) reps.push_back(orbit.front());
  if (Index bad = uncovered(reps); bad != kAbsent) throw NotFactorable(bad);
  // Drop representatives greedily, largest index first, while coverage survives.
  for (std::size_t i = reps.size(); i-- > 0;) {
    std::vector<Index> trial = reps;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (uncovered(trial) == kAbsent) reps = std::move(trial);
  }

  GeneratingSet out;
  out.reps = reps;
  out.witness.assign(p.size(), {});
  const std::vector<Index> letters = letters_for(reps).members();
  std::vector<Index> from(p.size(), kAbsent), via(p.size(), kAbsent);
  std::vector<bool> seen(p.size(), false);
  std::deque<Index> q;
  // Shortest words: BFS from the identity; the identity itself gets no word.
  seen[m.identity()] = true;
  q.push_back(m.identity());
  while (!q.empty()) {
    const Index cur = q.front();
    q.pop_front();
    for (Index a : letters) {
      const Index nxt = m.mul(cur, a);
      if (nxt == kAbsent || seen[nxt]) continue;
      seen[nxt] = true;
      from[nxt] = cur;
      via[nxt] = a;
      q.push_back(nxt);
    }
  }
  nu.for_each([&](Index x) {
    std::vector<Index> w;
    for (Index cur = x; cur != m.identity(); cur = from[cur]) w.push_back(via[cur]);
    std::reverse(w.begin(), w.end());
    out.witness[x] = std::move(w);
  });
  return out;
}

}  // namespace premon
