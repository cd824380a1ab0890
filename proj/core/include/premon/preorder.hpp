#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "premon/bitset.hpp"
#include "premon/finite_monoid.hpp"

namespace premon {

enum class PreorderKind { divisibility, matrix, pullback, phi, rule };
std::string to_string(PreorderKind k);

// Reflexive-transitive relation on 0..n-1 as a dense bit matrix with the
// closure precomputed. up(x) = {y : x <= y}, down(x) = {y : y <= x}.
class PreorderRel {
 public:
  PreorderRel() = default;

  // Closes `rel` reflexively and transitively; the input is kept as provenance.
  static PreorderRel closure_of(std::vector<Bitset> rel, PreorderKind kind);
  // Caller guarantees `rel` is already a preorder.
  static PreorderRel trusted(std::vector<Bitset> rel, PreorderKind kind);
  static PreorderRel total(Index n);
  static PreorderRel discrete(Index n);

  Index size() const { return static_cast<Index>(up_.size()); }
  bool leq(Index x, Index y) const { return up_[x].test(y); }
  bool lt(Index x, Index y) const { return leq(x, y) && !leq(y, x); }
  bool equiv(Index x, Index y) const { return leq(x, y) && leq(y, x); }
  const Bitset& up(Index x) const { return up_[x]; }
  const Bitset& down(Index x) const { return down_[x]; }
  // Smallest member of the equivalence class of x.
  Index class_of(Index x) const { return class_[x]; }
  PreorderKind kind() const { return kind_; }
  const std::vector<Bitset>& original() const { return original_; }

  friend bool operator==(const PreorderRel& a, const PreorderRel& b) { return a.up_ == b.up_; }

 private:
  void finish();

  std::vector<Bitset> up_, down_, original_;
  std::vector<Index> class_;
  PreorderKind kind_ = PreorderKind::matrix;
};

PreorderRel divisibility_preorder(const FiniteMonoid& m);

// x <= y iff codomain.leq(phi[x], phi[y]).
PreorderRel pullback_preorder(const std::vector<Index>& phi, const PreorderRel& codomain);

// Restriction to the members of mask, re-indexed in increasing order (the
// same order Submonoid uses).
PreorderRel restrict(const PreorderRel& rel, const Bitset& mask);

struct PhiPreorder {
  PreorderRel rel;
  std::vector<std::uint64_t> phi;  // 0 for the identity and for elements outside <A>
};

// Minimal A-word length pulled back from (N, <=). Throws Error if the
// identity is in A.
PhiPreorder phi_preorder(const FiniteMonoid& m, const std::vector<Index>& a);

}  // namespace premon
