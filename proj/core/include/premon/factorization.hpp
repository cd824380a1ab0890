#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "premon/length_set.hpp"
#include "premon/premonoid.hpp"
#include "premon/words.hpp"

namespace premon {

enum class Alphabet { irreducibles, atoms };
// How minimal atomic factorizations are read: paper_literal keeps the atom
// words among the minimal factorizations over all irreducibles;
// within_atomic takes the minimal elements of the atomic factorizations.
enum class AtomicMode { none, paper_literal, within_atomic };

struct MinimalClass {
  ClassVector vector;
  FactorWord representative;
};

struct MinimalResult {
  std::vector<MinimalClass> classes;  // ordered by (length, vector)
  bool certified = true;              // false if the state budget cut the search short
  std::size_t length_cap = 0;
  LengthSet lengths() const;
};

// Powers S_k = A^k (k >= 1) of the letter set inside the power semigroup of
// the carrier. The sequence is eventually periodic: S_{start + i} =
// S_{start + (i mod period)}.
struct LayerSequence {
  std::vector<Bitset> layers;  // layers[k - 1] = S_k for k < start + period
  std::size_t start = 1;
  std::size_t period = 1;
  const Bitset& at(std::uint64_t k) const;
};

class FactorizationStream {
 public:
  // Next word in (length, lexicographic) order, or nullopt when exhausted.
  std::optional<FactorWord> next();

 private:
  friend class FactorizationEngine;
  struct Frame {
    Index prod;
    std::size_t next;
  };
  const FiniteMonoid* m_ = nullptr;
  std::vector<Index> letters_;
  std::vector<Bitset> reach_;  // reach_[r]: products that reach x with r more letters
  std::size_t max_len_ = 0;
  std::size_t len_ = 1;
  bool open_ = false;
  std::vector<Frame> stack_;
  std::vector<Index> word_;
};

struct EngineLimits {
  std::size_t max_layers = std::size_t{1} << 20;
  std::size_t max_states = 4'000'000;
};

class FactorizationEngine {
 public:
  explicit FactorizationEngine(Premonoid p, EngineLimits limits = {});

  const Premonoid& premonoid() const { return p_; }
  const Bitset& non_units() const { return non_units_; }
  const Bitset& letters(Alphabet a) const { return a == Alphabet::atoms ? atoms_ : irreducibles_; }
  const LayerSequence& layers(Alphabet a) const { return a == Alphabet::atoms ? atom_layers_ : irr_layers_; }

  LengthSet length_set(Index x, Alphabet a = Alphabet::irreducibles) const;
  FactorizationStream enumerate(Index x, std::size_t max_len, Alphabet a = Alphabet::irreducibles) const;
  std::vector<FactorWord> factorizations(Index x, std::size_t max_len,
                                         Alphabet a = Alphabet::irreducibles) const;
  MinimalResult minimal(Index x, AtomicMode mode = AtomicMode::none) const;
  // Distinct class vectors of factorizations of length <= max_len; nullopt
  // if the state budget is exceeded.
  std::optional<std::vector<ClassVector>> class_vectors(Index x, Alphabet a, std::size_t max_len) const;
  // A shortest non-empty word over `letters` with product x.
  std::optional<FactorWord> shortest(Index x, const Bitset& letters) const;

 private:
  MinimalResult minimal_over(Index x, const Bitset& letters) const;
  std::optional<FactorWord> realize_with(Index x, const ClassVector& v, const Bitset& letters) const;

  Premonoid p_;
  EngineLimits limits_;
  Bitset non_units_, irreducibles_, atoms_;
  LayerSequence irr_layers_, atom_layers_;
};

LayerSequence layer_sequence(const FiniteMonoid& m, const Bitset& letters, std::size_t max_layers);

}  // namespace premon
