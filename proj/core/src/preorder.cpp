#include "premon/preorder.hpp"

#include <limits>

namespace premon {

std::string to_string(PreorderKind k) {
  switch (k) {
    case PreorderKind::divisibility: return "divisibility";
    case PreorderKind::matrix: return "matrix";
    case PreorderKind::pullback: return "pullback";
    case PreorderKind::phi: return "phi";
    case PreorderKind::rule: return "rule";
  }
  return "matrix";
}

PreorderRel PreorderRel::closure_of(std::vector<Bitset> rel, PreorderKind kind) {
  const auto n = static_cast<Index>(rel.size());
  for (const auto& row : rel)
    if (row.size() != n) throw ShapeError("preorder matrix must be square");
  PreorderRel out;
  out.original_ = rel;
  for (Index i = 0; i < n; ++i) rel[i].set(i);
  // Warshall on bit rows: after step k, rows see paths through 0..k.
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (i != k && rel[i].test(k)) rel[i] |= rel[k];
  out.up_ = std::move(rel);
  out.kind_ = kind;
  out.finish();
  return out;
}

PreorderRel PreorderRel::trusted(std::vector<Bitset> rel, PreorderKind kind) {
  PreorderRel out;
  out.up_ = std::move(rel);
  out.kind_ = kind;
  out.finish();
  return out;
}

PreorderRel PreorderRel::total(Index n) {
  Bitset all(n);
  all.set_all();
  return trusted(std::vector<Bitset>(n, all), PreorderKind::matrix);
}

PreorderRel PreorderRel::discrete(Index n) {
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index i = 0; i < n; ++i) rel[i].set(i);
  return trusted(std::move(rel), PreorderKind::matrix);
}

void PreorderRel::finish() {
  const Index n = size();
  down_.assign(n, Bitset(n));
  for (Index x = 0; x < n; ++x) up_[x].for_each([&](Index y) { down_[y].set(x); });
  class_.assign(n, kAbsent);
  for (Index x = 0; x < n; ++x) {
    if (class_[x] != kAbsent) continue;
    Bitset cls = up_[x];
    cls &= down_[x];
    cls.for_each([&](Index y) { class_[y] = x; });
  }
}

PreorderRel divisibility_preorder(const FiniteMonoid& m) {
  return PreorderRel::trusted(divisibility_rows(m), PreorderKind::divisibility);
}

PreorderRel pullback_preorder(const std::vector<Index>& phi, const PreorderRel& codomain) {
  const auto n = static_cast<Index>(phi.size());
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (codomain.leq(phi[x], phi[y])) rel[x].set(y);
  return PreorderRel::trusted(std::move(rel), PreorderKind::pullback);
}

PreorderRel restrict(const PreorderRel& rel, const Bitset& mask) {
  const std::vector<Index> keep = mask.members();
  const auto k = static_cast<Index>(keep.size());
  std::vector<Bitset> out(k, Bitset(k));
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      if (rel.leq(keep[i], keep[j])) out[i].set(j);
  return PreorderRel::trusted(std::move(out), rel.kind());
}

PhiPreorder phi_preorder(const FiniteMonoid& m, const std::vector<Index>& a) {
  const Index n = m.size();
  for (Index x : a)
    if (x == m.identity()) throw Error("phi preorder: the identity may not belong to A");
  constexpr auto kUnseen = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(n, kUnseen);
  std::vector<Index> frontier{m.identity()};
  dist[m.identity()] = 0;
  for (std::uint64_t d = 1; !frontier.empty(); ++d) {
    std::vector<Index> next;
    for (Index p : frontier)
      for (Index x : a) {
        const Index q = m.mul(p, x);
        if (q != kAbsent && dist[q] == kUnseen) {
          dist[q] = d;
          next.push_back(q);
        }
      }
    frontier = std::move(next);
  }
  PhiPreorder out;
  out.phi.assign(n, 0);
  for (Index x = 0; x < n; ++x)
    if (x != m.identity() && dist[x] != kUnseen) out.phi[x] = dist[x];
  std::vector<Bitset> rel(n, Bitset(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (out.phi[x] <= out.phi[y]) rel[x].set(y);
  out.rel = PreorderRel::trusted(std::move(rel), PreorderKind::phi);
  return out;
}

}  // namespace premon
