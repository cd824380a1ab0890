#include "premon/finite_monoid.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

namespace premon {

namespace {

void check_identity(Index n, Index e, const std::vector<Index>& t) {
  for (Index x = 0; x < n; ++x)
    if (t[static_cast<std::size_t>(e) * n + x] != x || t[static_cast<std::size_t>(x) * n + e] != x)
      throw BadIdentity(x);
}

std::vector<std::string> default_labels(Index n) {
  std::vector<std::string> out(n);
  for (Index i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace

FiniteMonoid FiniteMonoid::load(std::size_t n, Index identity, std::vector<Index> table,
                                LoadOptions opts) {
  if (n == 0) throw ShapeError("monoid must have at least one element");
  if (n >= kAbsent) throw ShapeError("carrier too large");
  if (table.size() != n * n)
    throw ShapeError("table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(n * n));
  if (identity >= n) throw ShapeError("identity index " + std::to_string(identity) + " out of range");
  for (Index v : table)
    if (v >= n) throw ShapeError("table entry " + std::to_string(v) + " out of range");
  const Index m = static_cast<Index>(n);
  check_identity(m, identity, table);
  if (!(opts.skip_associativity_above_256 && n > 256)) {
    for (Index x = 0; x < m; ++x)
      for (Index y = 0; y < m; ++y) {
        const Index xy = table[static_cast<std::size_t>(x) * m + y];
        for (Index z = 0; z < m; ++z) {
          const Index yz = table[static_cast<std::size_t>(y) * m + z];
          if (table[static_cast<std::size_t>(xy) * m + z] != table[static_cast<std::size_t>(x) * m + yz])
            throw NonAssociative(x, y, z);
        }
      }
  }
  FiniteMonoid out;
  out.n_ = m;
  out.identity_ = identity;
  out.table_ = std::move(table);
  out.labels_ = default_labels(m);
  return out;
}

FiniteMonoid FiniteMonoid::from_rows(const std::vector<std::vector<Index>>& rows, Index identity,
                                     LoadOptions opts) {
  std::vector<Index> flat;
  flat.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw ShapeError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(rows.size()));
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return load(rows.size(), identity, std::move(flat), opts);
}

FiniteMonoid FiniteMonoid::window(std::size_t n, Index identity, std::vector<Index> table) {
  if (n == 0 || table.size() != n * n || identity >= n) throw ShapeError("malformed window table");
  const Index m = static_cast<Index>(n);
  bool complete = true;
  for (Index v : table) {
    if (v == kAbsent) complete = false;
    else if (v >= m) throw ShapeError("window entry out of range");
  }
  check_identity(m, identity, table);
  auto at = [&](Index a, Index b) { return table[static_cast<std::size_t>(a) * m + b]; };
  for (Index x = 0; x < m; ++x)
    for (Index y = 0; y < m; ++y) {
      const Index xy = at(x, y);
      if (xy == kAbsent) continue;
      for (Index z = 0; z < m; ++z) {
        const Index yz = at(y, z);
        if (yz == kAbsent) continue;
        const Index l = at(xy, z), r = at(x, yz);
        if (l != kAbsent && r != kAbsent && l != r) throw NonAssociative(x, y, z);
      }
    }
  FiniteMonoid out;
  out.n_ = m;
  out.identity_ = identity;
  out.complete_ = complete;
  out.table_ = std::move(table);
  out.labels_ = default_labels(m);
  return out;
}

void FiniteMonoid::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) throw ShapeError("label count does not match carrier");
  labels_ = std::move(labels);
}

Index FiniteMonoid::find(const std::string& text) const {
  for (Index i = 0; i < n_; ++i)
    if (labels_[i] == text) return i;
  Index v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc() && p == text.data() + text.size() && v < n_) return v;
  return kAbsent;
}

Index pi(const FiniteMonoid& m, const std::vector<Index>& word) {
  Index acc = m.identity();
  for (Index a : word) {
    acc = m.mul(acc, a);
    if (acc == kAbsent) return kAbsent;
  }
  return acc;
}

Bitset units(const FiniteMonoid& m) {
  const Index n = m.size(), e = m.identity();
  Bitset out(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      if (m.mul(u, v) == e && m.mul(v, u) == e) {
        out.set(u);
        break;
      }
  return out;
}

Bitset left_multiples(const FiniteMonoid& m, Index x) {
  Bitset out(m.size());
  for (Index u = 0; u < m.size(); ++u)
    if (Index p = m.mul(u, x); p != kAbsent) out.set(p);
  return out;
}

Bitset right_multiples(const FiniteMonoid& m, Index x) {
  Bitset out(m.size());
  for (Index v = 0; v < m.size(); ++v)
    if (Index p = m.mul(x, v); p != kAbsent) out.set(p);
  return out;
}

Bitset two_sided_ideal(const FiniteMonoid& m, Index x) {
  // In a window uxv divides the window's top, so ux is itself in the window;
  // HxH = union of wH over w in Hx is therefore exact there as well.
  Bitset out(m.size());
  left_multiples(m, x).for_each([&](Index w) { out |= right_multiples(m, w); });
  return out;
}

bool divides(const FiniteMonoid& m, Index x, Index y) { return two_sided_ideal(m, x).test(y); }

std::vector<Bitset> divisibility_rows(const FiniteMonoid& m) {
  const Index n = m.size();
  std::vector<Bitset> right(n);
  for (Index w = 0; w < n; ++w) right[w] = right_multiples(m, w);
  std::vector<Bitset> rows(n, Bitset(n));
  for (Index x = 0; x < n; ++x)
    for (Index u = 0; u < n; ++u)
      if (Index w = m.mul(u, x); w != kAbsent) rows[x] |= right[w];
  return rows;
}

Bitset divisors(const FiniteMonoid& m, Index x) {
  const Index n = m.size();
  Bitset left_div(n);  // w with wv = x for some v
  for (Index w = 0; w < n; ++w)
    for (Index v = 0; v < n; ++v)
      if (m.mul(w, v) == x) {
        left_div.set(w);
        break;
      }
  Bitset out(n);
  for (Index y = 0; y < n; ++y)
    for (Index u = 0; u < n; ++u)
      if (Index w = m.mul(u, y); w != kAbsent && left_div.test(w)) {
        out.set(y);
        break;
      }
  return out;
}

Bitset product_closure(const FiniteMonoid& m, Bitset s) {
  s.set(m.identity());
  std::vector<Index> members = s.members();
  std::deque<Index> fresh(members.begin(), members.end());
  std::vector<Index> done;
  // Every pair of members is multiplied exactly once in each order.
  while (!fresh.empty()) {
    const Index a = fresh.front();
    fresh.pop_front();
    done.push_back(a);
    for (Index b : done) {
      for (Index p : {m.mul(a, b), m.mul(b, a)}) {
        if (p != kAbsent && !s.test(p)) {
          s.set(p);
          fresh.push_back(p);
        }
      }
    }
  }
  return s;
}

SubmonoidMask generated_submonoid(const FiniteMonoid& m, const std::vector<Index>& xs) {
  return product_closure(m, Bitset::from_members(m.size(), xs));
}

SubmonoidMask divisor_closed_closure(const FiniteMonoid& m, Index x) {
  const Index n = m.size();
  std::vector<Bitset> div_cache(n);
  std::vector<bool> have(n, false);
  Bitset s(n);
  s.set(x);
  for (;;) {
    Bitset next = s;
    s.for_each([&](Index y) {
      if (!have[y]) {
        div_cache[y] = divisors(m, y);
        have[y] = true;
      }
      next |= div_cache[y];
    });
    next = product_closure(m, std::move(next));
    if (next == s) return s;
    s = std::move(next);
  }
}

SubmonoidMask germ_submonoid(const FiniteMonoid& m, Index x) {
  return product_closure(m, divisors(m, x));
}

Submonoid submonoid(const FiniteMonoid& m, const SubmonoidMask& mask) {
  if (!mask.test(m.identity())) throw ShapeError("submonoid mask must contain the identity");
  Submonoid out;
  out.to_parent = mask.members();
  out.from_parent.assign(m.size(), kAbsent);
  for (Index i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = i;
  const auto k = static_cast<Index>(out.to_parent.size());
  std::vector<Index> table(static_cast<std::size_t>(k) * k, kAbsent);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) {
      const Index p = m.mul(out.to_parent[i], out.to_parent[j]);
      if (p == kAbsent) continue;
      if (out.from_parent[p] == kAbsent) throw ShapeError("mask is not closed under products");
      table[static_cast<std::size_t>(i) * k + j] = out.from_parent[p];
    }
  const Index e = out.from_parent[m.identity()];
  out.monoid = m.complete() ? FiniteMonoid::load(k, e, std::move(table), {true})
                            : FiniteMonoid::window(k, e, std::move(table));
  std::vector<std::string> labels;
  for (Index p : out.to_parent) labels.push_back(m.label(p));
  out.monoid.set_labels(std::move(labels));
  return out;
}

StructureFlags structure_flags(const FiniteMonoid& m) {
  const Index n = m.size(), e = m.identity();
  const Bitset u = units(m);
  StructureFlags f;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index xy = m.mul(x, y), yx = m.mul(y, x);
      if (xy != yx) f.commutative = false;
      if (xy == e && yx != e) f.dedekind_finite = false;
      if (!u.test(y) && (xy == x || yx == x)) f.unit_cancellative = false;
    }
  for (Index x = 0; x < n && f.acyclic; ++x)
    for (Index a = 0; a < n && f.acyclic; ++a) {
      const Index w = m.mul(a, x);
      if (w == kAbsent) continue;
      for (Index b = 0; b < n; ++b)
        if (m.mul(w, b) == x && (!u.test(a) || !u.test(b))) {
          f.acyclic = false;
          break;
        }
    }
  for (Index a = 0; a < n; ++a) {
    const Bitset ha = left_multiples(m, a), ah = right_multiples(m, a);
    if (!ah.is_subset_of(ha)) f.left_duo = false;
    if (!ha.is_subset_of(ah)) f.right_duo = false;
  }
  f.duo = f.left_duo && f.right_duo;
  f.reduced = u.count() == 1;
  return f;
}

Bitset set_product(const FiniteMonoid& m, const Bitset& a, const Bitset& b) {
  Bitset out(m.size());
  a.for_each([&](Index x) {
    b.for_each([&](Index y) {
      if (Index p = m.mul(x, y); p != kAbsent) out.set(p);
    });
  });
  return out;
}

bool unit_removal_holds(const FiniteMonoid& m, const Bitset& q, const Bitset& a) {
  const Bitset qaq = set_product(m, set_product(m, q, a), q);
  Bitset a_minus_q = a;
  a_minus_q.subtract(q);
  const Bitset rhs_gen = set_product(m, set_product(m, q, a_minus_q), q);
  Bitset rhs = product_closure(m, rhs_gen);
  rhs |= q;
  return product_closure(m, qaq).is_subset_of(rhs);
}

std::vector<std::size_t> duo_inclusion_failure(const FiniteMonoid& m, const std::vector<Index>& xs) {
  const std::size_t k = xs.size();
  if (k == 0) return {};
  Bitset lhs = two_sided_ideal(m, xs[0]);
  for (std::size_t i = 1; i < k; ++i) lhs = set_product(m, lhs, two_sided_ideal(m, xs[i]));
  for (std::uint32_t sel = 1; sel < (1U << k); ++sel) {
    std::vector<Index> word;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i)
      if (sel & (1U << i)) {
        word.push_back(xs[i]);
        pos.push_back(i);
      }
    const Index y = pi(m, word);
    if (y == kAbsent || !lhs.is_subset_of(left_multiples(m, y))) return pos;
  }
  return {};
}

FiniteMonoid opposite(const FiniteMonoid& m) {
  const Index n = m.size();
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = m.mul(b, a);
  FiniteMonoid out = m.complete() ? FiniteMonoid::load(n, m.identity(), std::move(t))
                                  : FiniteMonoid::window(n, m.identity(), std::move(t));
  out.set_labels(m.labels());
  return out;
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const Index na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x) * n + y] =
          a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  FiniteMonoid out = FiniteMonoid::load(n, a.identity() * nb + b.identity(), std::move(t));
  std::vector<std::string> labels;
  for (Index x = 0; x < n; ++x) labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  out.set_labels(std::move(labels));
  return out;
}

}  // namespace premon
