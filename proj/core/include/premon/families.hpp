#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "premon/locally_finite.hpp"

namespace premon {

// ------------------------------------------------------------ finite carriers

// Multiplicative monoid of the integers modulo n.
FiniteMonoid make_zn(Index n);
// Subsets of {0..k-1} under union (bit masks as indices), identity the empty set.
FiniteMonoid make_powerset(unsigned k);
// The same monoid with inclusion as preorder.
Premonoid make_powerset_premonoid(unsigned k);

// ------------------------------------------------------ locally finite

// Finite subsets of a finite monoid containing the identity, under setwise
// multiplication. Elements are sorted member lists.
class PowerMonoid : public LocallyFiniteMonoid {
 public:
  explicit PowerMonoid(FiniteMonoid base);
  std::string name() const override { return "power"; }
  Element identity() const override;
  Element op(const Element& a, const Element& b) const override;
  std::string format(const Element& x) const override;
  Element parse(const std::string& text) const override;
  std::vector<Element> default_roots() const override;
  std::vector<Element> divisor_candidates(const Element& x) const override;
  const FiniteMonoid& base() const { return base_; }

 protected:
  std::vector<Element> compute_divisors(const Element& x) const override;

 private:
  FiniteMonoid base_;
};

class CapExceeded : public QueryError {
 public:
  explicit CapExceeded(std::int64_t cap)
      : QueryError("element exceeds the configured cap " + std::to_string(cap)) {}
};

// Finite subsets of the naturals containing 0 under setwise addition.
class ReducedPowerN : public LocallyFiniteMonoid {
 public:
  explicit ReducedPowerN(std::int64_t cap);
  std::string name() const override { return "powerN"; }
  Element identity() const override { return {0}; }
  Element op(const Element& a, const Element& b) const override;
  std::string format(const Element& x) const override;
  Element parse(const std::string& text) const override;
  std::vector<Element> default_roots() const override;
  std::vector<Element> divisor_candidates(const Element& x) const override;

 protected:
  std::vector<Element> compute_divisors(const Element& x) const override;

 private:
  std::int64_t cap_;
};

// Additive submonoid of the naturals generated by gens.
class NumericalMonoid : public LocallyFiniteMonoid {
 public:
  explicit NumericalMonoid(std::vector<std::int64_t> gens, std::int64_t root_bound = 20);
  std::string name() const override { return "numerical"; }
  Element identity() const override { return {0}; }
  Element op(const Element& a, const Element& b) const override { return {a[0] + b[0]}; }
  std::string format(const Element& x) const override { return std::to_string(x[0]); }
  Element parse(const std::string& text) const override;
  std::vector<Element> default_roots() const override;
  std::vector<Element> divisor_candidates(const Element& x) const override;
  bool representable(std::int64_t x) const;

 protected:
  std::vector<Element> compute_divisors(const Element& x) const override;

 private:
  std::vector<std::int64_t> gens_;
  std::int64_t bound_;
  std::vector<bool> table_;  // representability up to bound_
};

// Submonoid of (N^2, +) generated by (1, n) and (n, 1) for all n >= 1.
class N2Submonoid : public LocallyFiniteMonoid {
 public:
  explicit N2Submonoid(std::int64_t m);
  std::string name() const override { return "n2sub"; }
  Element identity() const override { return {0, 0}; }
  Element op(const Element& a, const Element& b) const override { return {a[0] + b[0], a[1] + b[1]}; }
  std::string format(const Element& x) const override;
  Element parse(const std::string& text) const override;
  std::vector<Element> default_roots() const override { return {{m_, m_}}; }
  std::vector<Element> divisor_candidates(const Element& x) const override;
  bool member(std::int64_t a, std::int64_t b) const;
  std::int64_t bound() const { return m_; }

 protected:
  std::vector<Element> compute_divisors(const Element& x) const override;

 private:
  std::int64_t m_;
  std::vector<std::vector<bool>> grid_;  // membership for coordinates <= m_
};

// (N, +) with x <= y iff x = 0 or x, y >= 1.
class CoarseNaturals : public LocallyFiniteMonoid {
 public:
  explicit CoarseNaturals(std::int64_t cap) : cap_(cap) {}
  std::string name() const override { return "coarseN"; }
  Element identity() const override { return {0}; }
  Element op(const Element& a, const Element& b) const override { return {a[0] + b[0]}; }
  std::string format(const Element& x) const override { return std::to_string(x[0]); }
  Element parse(const std::string& text) const override;
  std::vector<Element> default_roots() const override { return {{cap_}}; }
  std::vector<Element> divisor_candidates(const Element& x) const override { return compute_divisors(x); }
  bool has_rule() const override { return true; }
  bool rule_leq(const Element& x, const Element& y) const override { return x[0] == 0 || (x[0] >= 1 && y[0] >= 1); }

 protected:
  std::vector<Element> compute_divisors(const Element& x) const override;

 private:
  std::int64_t cap_;
};

// ------------------------------------------------------ product-one sequences

// Group elements as pairs; finite groups use (index, 0), dihedral groups
// (k, e) for r^k (e = 0) or r^k s (e = 1).
using GroupElem = std::pair<std::int64_t, std::int64_t>;

class Group {
 public:
  virtual ~Group() = default;
  virtual std::string name() const = 0;
  virtual GroupElem identity() const = 0;
  virtual GroupElem mul(const GroupElem& a, const GroupElem& b) const = 0;
  virtual std::string format(const GroupElem& g) const = 0;
  virtual GroupElem parse(const std::string& text) const = 0;
};

std::unique_ptr<Group> make_cyclic_group(std::int64_t n);      // e, g, g2, ...
std::unique_ptr<Group> make_dihedral_group(std::int64_t n);    // n = 0: infinite; r<k>, s<k>
std::unique_ptr<Group> make_table_group(FiniteMonoid m);       // throws InputError unless a group

class NotProductOne : public QueryError {
 public:
  explicit NotProductOne(const std::string& what) : QueryError("not a product-one sequence: " + what) {}
};

// Product-one sequences over G0 as multiplicity vectors. Commutative and
// cancellative, so T | S iff T and S - T are both product-one.
class ProductOneMonoid : public LocallyFiniteMonoid {
 public:
  ProductOneMonoid(std::shared_ptr<const Group> g, std::vector<GroupElem> g0, std::int64_t max_size = 6);
  std::string name() const override { return "b"; }
  Element identity() const override { return Element(g0_.size(), 0); }
  Element op(const Element& a, const Element& b) const override;
  std::string format(const Element& x) const override;
  Element parse(const std::string& text) const override;  // "(g,g,g2)"
  std::vector<Element> default_roots() const override;
  std::vector<Element> divisor_candidates(const Element& x) const override;
  // Some ordering of the sequence multiplies to the identity.
  bool is_product_one(const Element& counts) const;
  const Group& group() const { return *g_; }
  const std::vector<GroupElem>& support() const { return g0_; }

 protected:
  std::vector<Element> compute_divisors(const Element& x) const override;

 private:
  std::shared_ptr<const Group> g_;
  std::vector<GroupElem> g0_;
  std::int64_t max_size_;
  mutable std::mutex mu_;
  mutable std::map<Element, bool> memo_;
};

// ------------------------------------------------------------ instances

// A loaded premonoid: either a finite carrier, or a divisor window of a
// locally finite family.
struct Instance {
  std::string spec;
  Premonoid premonoid;
  std::shared_ptr<const LocallyFiniteMonoid> family;  // null for finite carriers
  std::vector<Element> elements;                      // window elements, carrier order
  bool heights_exact = true;

  bool is_window() const { return family != nullptr; }
  // Label, decimal index, or (for windows) family syntax. Throws QueryError
  // if the text is malformed or the element is outside the carrier.
  Index find(const std::string& text) const;
};

// zn:<n> | powerset:<k> | power:<base spec> | powerN:<cap> | numerical:<g1,g2,..>
// | n2sub:<M> | coarseN:<cap> | b:<Cn|Dn|Dinf|file>:<G0>[:<max size>] | <monoid.json>.
// For windows, `roots` (family syntax) replace the family's default roots.
Instance load_instance(const std::string& spec, const std::vector<std::string>& roots = {});

// Spec strings of the built-in example instances, finite and windowed.
const std::vector<std::string>& builtin_specs();

// Prime factors of n with multiplicity, by trial division.
std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace premon
