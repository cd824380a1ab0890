#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "premon/factorization.hpp"

namespace premon {

// Columns of the classification lattice. The *_atomic_paper columns use the
// literal reading of minimal atomic factorizations (minimal among all
// irreducible factorizations, then restricted to atom words); the plain
// m-atomic columns are minimal within the atomic factorizations.
enum class Property : std::size_t {
  factorable,
  bf, ff, hf, uf,
  bmf, fmf, hmf, umf,
  atomic,
  bf_atomic, ff_atomic, hf_atomic, uf_atomic,
  bmf_atomic, fmf_atomic, hmf_atomic, umf_atomic,
  bmf_atomic_paper, fmf_atomic_paper, hmf_atomic_paper, umf_atomic_paper,
};
inline constexpr std::size_t kPropertyCount = 22;
std::string_view property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);

using PropertyRow = std::array<bool, kPropertyCount>;

struct ElementProfile {
  Index x = 0;
  LengthSet lengths, atomic_lengths;
  // Number of distinct class vectors; nullopt when infinite.
  std::optional<std::size_t> vectors, atomic_vectors;
  MinimalResult minimal, minimal_within, minimal_paper;
  PropertyRow holds{};
  bool exact = true;  // false if a state budget truncated some count
};

struct Verdict {
  bool holds = true;
  Index witness = kAbsent;  // first element (by index) where the property fails
  std::string reason;
};

struct ClassificationReport {
  std::array<Verdict, kPropertyCount> verdicts;
  std::vector<ElementProfile> elements;  // one per non-unit, increasing index
  bool vacuous = false;                  // no non-units at all
  bool exact = true;
  const Verdict& operator[](Property p) const { return verdicts[static_cast<std::size_t>(p)]; }
};

struct ClassifyOptions {
  unsigned threads = 1;
  // Restrict the quantifier to these elements (all non-units when empty).
  std::vector<Index> only;
};

ElementProfile profile_element(const FactorizationEngine& engine, Index x);
ClassificationReport classify(const FactorizationEngine& engine, const ClassifyOptions& opts = {});

// The implication arrows between columns (same arrows on the factorable and
// on the within-atomic side).
const std::vector<std::pair<Property, Property>>& diagram_arrows();

struct DiagramViolation {
  Index x;
  Property from, to;
};
// Checked element by element, which is stronger than checking the global
// verdicts.
std::vector<DiagramViolation> diagram_violations(const ClassificationReport& r);

}  // namespace premon
