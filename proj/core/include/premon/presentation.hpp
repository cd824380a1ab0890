#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "premon/types.hpp"

namespace premon {

class BoundTooSmall : public InputError {
 public:
  explicit BoundTooSmall(std::size_t need)
      : InputError("length bound must be at least the longest relation side (" + std::to_string(need) + ")") {}
};

// A word over the alphabet, letters as indices into the alphabet string.
using Letters = std::vector<unsigned char>;

struct Presentation {
  std::string alphabet;                          // one character per generator
  std::vector<std::pair<Letters, Letters>> relations;
};

// "x2=yx2y,xy=yx": a letter may carry a decimal exponent.
Presentation parse_presentation(const std::string& alphabet, const std::string& relations);

// Congruence generated by the relations, restricted to the words of length
// <= bound: classes merge by single relation rewrites that stay within the
// bound, then by left/right multiplication of merged pairs while both results
// fit. Every merge is a true consequence of the relations; words that stay
// apart may still be equal in the monoid. Results are evidence, not proof.
class BoundedCongruence {
 public:
  BoundedCongruence(Presentation p, std::size_t bound);

  const Presentation& presentation() const { return p_; }
  std::size_t bound() const { return bound_; }
  std::size_t word_count() const { return words_.size(); }
  const Letters& word(std::size_t i) const { return words_[i]; }
  std::size_t index_of(const Letters& w) const;  // throws QueryError beyond the bound
  std::size_t class_of(std::size_t word) const;  // representative word index
  bool same_class(const Letters& a, const Letters& b) const { return class_of(index_of(a)) == class_of(index_of(b)); }
  std::size_t class_count() const { return class_ids_.size(); }
  // Class ids 0..class_count()-1, ordered by shortest-lexicographic representative.
  std::size_t class_id(std::size_t word) const;
  const std::vector<std::size_t>& members(std::size_t cls) const { return class_members_[cls]; }
  std::string text(const Letters& w) const;

 private:
  std::size_t find(std::size_t x) const;
  bool unite(std::size_t a, std::size_t b);

  Presentation p_;
  std::size_t bound_;
  std::vector<Letters> words_;  // shortlex order, words_[0] = empty word
  mutable std::vector<std::size_t> parent_;
  std::vector<std::size_t> class_ids_;           // class id -> representative word
  std::vector<std::size_t> word_class_;          // word -> class id
  std::vector<std::vector<std::size_t>> class_members_;
};

struct DivisibilityChain {
  std::vector<std::size_t> classes;  // class ids; each strictly divides the previous one
  std::vector<std::string> representatives;
};

struct PresentationEvidence {
  std::size_t bound = 0, words = 0, classes = 0;
  // Longest chain c1, c2, ... with c_{i+1} a strict (bounded) divisor of c_i.
  DivisibilityChain longest_chain;
  // Same, but each class's shortest representative is at least as long as
  // the previous one's: impossible in a free monoid, so this is the chain
  // reported as evidence against the ascending chain condition.
  DivisibilityChain non_shrinking_chain;
  // Words w with a proper factor in the same class, i.e. w = u w' v with
  // w' ~ w and uv non-empty (acyclicity refutation).
  std::vector<std::pair<std::string, std::string>> cycles;
  std::string label = "bounded evidence, not a certificate";
};

PresentationEvidence explore(const BoundedCongruence& c, std::size_t max_cycles = 16);

}  // namespace premon
