#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "premon/classification.hpp"

namespace premon {

struct Check {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::pass;
  std::string detail;  // counterexample on failure, reason when skipped
};
std::string to_string(Check::Status s);

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const;
  const Check* find(const std::string& name) const;
};

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t seed = 1;
  Index brute_force_max = 6;  // carriers up to this size get the brute-force minimality cross-check
  bool window = false;        // carrier is a divisor window (partial table)
  bool heights_exact = true;
};

// Runs every applicable theorem-level check on one premonoid. A failing
// check always carries the offending element or tuple.
VerifyReport verify_suite(const Premonoid& p, const VerifyOptions& opts = {});

// Individual checks, exposed for tests and the acceptance gate.
Check check_localization(const Premonoid& p, Index x);
Check check_height_bound(const FactorizationEngine& e, unsigned s, bool heights_exact = true);
Check check_minimal_brute_force(const FactorizationEngine& e);
Check check_duo_inclusion(const FiniteMonoid& m, std::uint64_t seed);

// All words over `letters` of length 1..max_len with product x, and the
// sub-multiset-minimal class vectors among them. Plain enumeration without
// pruning; the independent reference for the minimal-class search.
std::vector<ClassVector> brute_force_minimal_vectors(const Premonoid& p, const Bitset& letters, Index x,
                                                     std::size_t max_len, std::size_t* longest = nullptr);

}  // namespace premon
