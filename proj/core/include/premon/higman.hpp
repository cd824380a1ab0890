#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "premon/preorder.hpp"

namespace premon {

using Word = std::vector<Index>;

// Strictly increasing positions p with u[i] == v[p[i]] (0-based), found
// greedily left to right, which is exact for letter equality.
std::optional<std::vector<std::size_t>> scattered_subword(const Word& u, const Word& v);

// Same, with u[i] <= v[p[i]] in `rel`. Greedy is still exact: matching each
// letter of u to the earliest admissible position never hurts later letters.
std::optional<std::vector<std::size_t>> embeds(const Word& u, const Word& v, const PreorderRel& rel);

struct ErdosRadoHit {
  std::size_t i, j;  // 0-based, i < j
  std::vector<std::size_t> embedding;
};
// The lexicographically least pair (i, j) with words[i] embedding into words[j].
std::optional<ErdosRadoHit> erdos_rado_scan(const std::vector<Word>& words, const PreorderRel& rel);

// Longest bad sequence (no earlier word is a scattered subword of a later one)
// over an alphabet of size k, starting with `first`, with every word of
// length <= max_len. Exhaustive depth-first search; small inputs only.
std::vector<Word> longest_bad_sequence(std::size_t k, const Word& first, std::size_t max_len);

}  // namespace premon
