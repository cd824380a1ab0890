#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the table lookup and the preorder matrix, and are only
// meant for carriers of a handful of elements.

#include <functional>
#include <set>
#include <vector>

#include "premon/premonoid.hpp"
#include "premon/words.hpp"

namespace oracle {

using premon::Index;
using premon::kAbsent;
using premon::Premonoid;

inline bool is_unit(const Premonoid& p, Index x) {
  const Index e = p.monoid.identity();
  return p.rel.leq(x, e) && p.rel.leq(e, x);
}

inline bool strictly_below(const Premonoid& p, Index y, Index x) { return p.rel.leq(y, x) && !p.rel.leq(x, y); }

// y in HxH, by scanning every u and v.
inline bool divides(const premon::FiniteMonoid& m, Index x, Index y) {
  for (Index u = 0; u < m.size(); ++u) {
    const Index ux = m.mul(u, x);
    if (ux == kAbsent) continue;
    for (Index v = 0; v < m.size(); ++v)
      if (m.mul(ux, v) == y) return true;
  }
  return false;
}

// Every tuple of length 2..s of non-units (strictly below a when `strict`)
// is multiplied out left to right.
inline bool decomposes(const Premonoid& p, Index a, unsigned s, bool strict) {
  const Index n = p.size();
  std::vector<Index> cand;
  for (Index y = 0; y < n; ++y)
    if (!is_unit(p, y) && (!strict || strictly_below(p, y, a))) cand.push_back(y);
  std::function<bool(Index, unsigned)> rec = [&](Index prod, unsigned used) -> bool {
    if (used >= 2 && prod == a) return true;
    if (used == s) return false;
    for (Index y : cand) {
      const Index q = used == 0 ? y : p.monoid.mul(prod, y);
      if (q != kAbsent && rec(q, used + 1)) return true;
    }
    return false;
  };
  return rec(p.monoid.identity(), 0);
}

inline std::vector<Index> irreducibles(const Premonoid& p, unsigned s) {
  std::vector<Index> out;
  for (Index a = 0; a < p.size(); ++a)
    if (!is_unit(p, a) && !decomposes(p, a, s, true)) out.push_back(a);
  return out;
}

inline std::vector<Index> atoms(const Premonoid& p, unsigned s) {
  std::vector<Index> out;
  for (Index a = 0; a < p.size(); ++a)
    if (!is_unit(p, a) && !decomposes(p, a, s, false)) out.push_back(a);
  return out;
}

inline std::vector<Index> quarks(const Premonoid& p) {
  std::vector<Index> out;
  for (Index a = 0; a < p.size(); ++a) {
    if (is_unit(p, a)) continue;
    bool minimal = true;
    for (Index y = 0; y < p.size(); ++y)
      if (!is_unit(p, y) && strictly_below(p, y, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

// u below v in the shuffling preorder, straight from the definition: an
// injective map from positions of u to positions of v with equivalent
// letters, found by augmenting paths.
inline bool shuffle_leq_literal(const premon::PreorderRel& rel, const std::vector<Index>& u, const std::vector<Index>& v) {
  if (u.size() > v.size()) return false;
  std::vector<int> owner(v.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (seen[j] || !rel.equiv(u[i], v[j])) continue;
      seen[j] = true;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<bool> seen(v.size(), false);
    if (!augment(i, seen)) return false;
  }
  return true;
}

// All words of length 1..max_len over `letters` whose product is x.
inline std::vector<std::vector<Index>> words_with_product(const Premonoid& p, const std::vector<Index>& letters, Index x,
                                                          std::size_t max_len) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> w;
  std::function<void()> rec = [&]() {
    if (!w.empty()) {
      Index prod = p.monoid.identity();
      for (Index a : w) prod = prod == kAbsent ? kAbsent : p.monoid.mul(prod, a);
      if (prod == x) out.push_back(w);
    }
    if (w.size() == max_len) return;
    for (Index a : letters) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

inline std::set<std::size_t> lengths(const Premonoid& p, const std::vector<Index>& letters, Index x, std::size_t max_len) {
  std::set<std::size_t> out;
  for (const auto& w : words_with_product(p, letters, x, max_len)) out.insert(w.size());
  return out;
}

// Shuffle-minimal words, compared with the literal matching, reported as
// their class multisets.
inline std::set<premon::ClassVector> minimal_classes(const Premonoid& p, const std::vector<Index>& letters, Index x,
                                                     std::size_t max_len) {
  const auto all = words_with_product(p, letters, x, max_len);
  std::set<premon::ClassVector> out;
  for (const auto& w : all) {
    bool minimal = true;
    for (const auto& o : all)
      if (shuffle_leq_literal(p.rel, o, w) && !shuffle_leq_literal(p.rel, w, o)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(premon::class_vector(p.rel, premon::FactorWord{w}));
  }
  return out;
}

}  // namespace oracle
