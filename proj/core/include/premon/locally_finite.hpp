#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "premon/premonoid.hpp"

namespace premon {

// Elements of an infinite family, encoded as integer tuples. The encoding is
// canonical so that std::vector's ordering gives a deterministic total order.
using Element = std::vector<std::int64_t>;

// A monoid in which every element has finitely many divisors, each family
// supplying its own certified divisor routine.
class LocallyFiniteMonoid {
 public:
  virtual ~LocallyFiniteMonoid() = default;

  virtual std::string name() const = 0;
  virtual Element identity() const = 0;
  virtual Element op(const Element& a, const Element& b) const = 0;
  virtual std::string format(const Element& x) const = 0;
  virtual Element parse(const std::string& text) const = 0;  // throws QueryError
  // Roots of the window used when the caller names no element.
  virtual std::vector<Element> default_roots() const = 0;
  // A finite superset of the divisors of x, for brute-force cross-checks.
  virtual std::vector<Element> divisor_candidates(const Element& x) const = 0;

  // A custom preorder replaces divisibility when this returns true.
  virtual bool has_rule() const { return false; }
  virtual bool rule_leq(const Element&, const Element&) const { return false; }
  // Whether every y strictly below x (in the active preorder) divides x, so
  // that heights computed inside a divisor window are exact.
  virtual bool strict_below_divides() const { return true; }

  // All y with y | x, sorted; memoized, safe to call from several threads.
  const std::vector<Element>& divisors(const Element& x) const;
  // y | x by definition: x = u y v with u, v among the candidates.
  std::vector<Element> brute_force_divisors(const Element& x) const;

 protected:
  virtual std::vector<Element> compute_divisors(const Element& x) const = 0;

 private:
  mutable std::mutex mu_;
  mutable std::map<Element, std::vector<Element>> cache_;
};

// The union of the divisor sets of some roots: closed under taking divisors,
// so every factorization question about one of its members is answered
// exactly inside it. Products that leave the window are undefined.
struct Window {
  Premonoid premonoid;
  std::vector<Element> elements;  // carrier index -> element, increasing
  bool heights_exact = true;
  Index index_of(const Element& x) const;  // kAbsent if outside
};

Window build_window(const LocallyFiniteMonoid& lf, const std::vector<Element>& roots);

// Smallest set containing x that is closed under divisors and under products
// accepted by `keep` (the closure is infinite in general, so the caller
// bounds it).
std::vector<Element> bounded_divisor_closed_closure(const LocallyFiniteMonoid& lf, const Element& x,
                                                    const std::function<bool(const Element&)>& keep);

}  // namespace premon
