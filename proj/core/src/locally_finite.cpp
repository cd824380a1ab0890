#include "premon/locally_finite.hpp"

#include <algorithm>
#include <set>

namespace premon {

const std::vector<Element>& LocallyFiniteMonoid::divisors(const Element& x) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(x); it != cache_.end()) return it->second;
  }
  std::vector<Element> d = compute_divisors(x);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  std::lock_guard lock(mu_);
  // std::map never moves nodes, so the reference stays valid.
  return cache_.emplace(x, std::move(d)).first->second;
}

std::vector<Element> LocallyFiniteMonoid::brute_force_divisors(const Element& x) const {
  const std::vector<Element> c = divisor_candidates(x);
  std::vector<Element> out;
  for (const Element& y : c) {
    bool found = false;
    for (const Element& u : c) {
      const Element uy = op(u, y);
      for (const Element& v : c)
        if (op(uy, v) == x) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (found) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Index Window::index_of(const Element& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return kAbsent;
  return static_cast<Index>(it - elements.begin());
}

Window build_window(const LocallyFiniteMonoid& lf, const std::vector<Element>& roots) {
  std::set<Element> all;
  all.insert(lf.identity());
  for (const Element& r : roots)
    for (const Element& d : lf.divisors(r)) all.insert(d);

  Window w;
  w.elements.assign(all.begin(), all.end());
  const auto n = static_cast<Index>(w.elements.size());
  std::vector<Index> table(static_cast<std::size_t>(n) * n, kAbsent);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = w.index_of(lf.op(w.elements[a], w.elements[b]));
  FiniteMonoid m = FiniteMonoid::window(n, w.index_of(lf.identity()), std::move(table));
  std::vector<std::string> labels;
  for (const Element& e : w.elements) labels.push_back(lf.format(e));
  m.set_labels(std::move(labels));

  std::vector<Bitset> up(n, Bitset(n));
  if (lf.has_rule()) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (lf.rule_leq(w.elements[a], w.elements[b])) up[a].set(b);
    w.premonoid = Premonoid(std::move(m), PreorderRel::closure_of(std::move(up), PreorderKind::rule));
    w.heights_exact = lf.strict_below_divides();
  } else {
    // y | x inside the window exactly when y is a divisor of x in the family.
    for (Index x = 0; x < n; ++x)
      for (const Element& d : lf.divisors(w.elements[x])) up[w.index_of(d)].set(x);
    w.premonoid = Premonoid(std::move(m), PreorderRel::trusted(std::move(up), PreorderKind::divisibility));
  }
  return w;
}

std::vector<Element> bounded_divisor_closed_closure(const LocallyFiniteMonoid& lf, const Element& x,
                                                    const std::function<bool(const Element&)>& keep) {
  std::set<Element> s{lf.identity(), x};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Element> cur(s.begin(), s.end());
    for (const Element& y : cur)
      for (const Element& d : lf.divisors(y)) grew |= s.insert(d).second;
    cur.assign(s.begin(), s.end());
    for (const Element& a : cur)
      for (const Element& b : cur) {
        Element p = lf.op(a, b);
        if (keep(p)) grew |= s.insert(std::move(p)).second;
      }
  }
  return {s.begin(), s.end()};
}

}  // namespace premon
