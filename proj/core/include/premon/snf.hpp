#pragma once

#include <cstdint>
#include <vector>

#include "premon/length_set.hpp"
#include "premon/types.hpp"

namespace premon {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
__extension__ using Int128 = __int128;

class Singular : public Error {
 public:
  Singular() : Error("matrix is singular") {}
};

class DetTooLarge : public Error {
 public:
  explicit DetTooLarge(std::int64_t bound)
      : Error("|det| exceeds the factoring bound " + std::to_string(bound)), bound(bound) {}
  std::int64_t bound;
};

class Overflow : public Error {
 public:
  Overflow() : Error("integer overflow in matrix arithmetic") {}
};

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);  // checked
Int128 determinant(const IntMatrix& a);                    // fraction-free elimination

// U * A * V = D with U, V unimodular and D = diag(d1, .., dn), d_i >= 0,
// d_i | d_{i+1}. Uinv, Vinv are the inverses, tracked alongside. The
// constructor re-checks every invariant and throws Error if one fails.
struct SnfResult {
  IntMatrix u, v, d, uinv, vinv;
  std::vector<std::int64_t> diagonal() const;
};
// Pivot rule: smallest nonzero absolute value, ties broken row-major.
SnfResult snf(const IntMatrix& a);

struct MatrixDivisorClass {
  std::vector<std::int64_t> diagonal;  // representative diag(p1, .., pn)
  std::vector<std::int64_t> invariants;
  std::size_t candidates = 0;          // (I1..In) tuples collapsing to this class
  bool divides = false;                // B | A in the matrix monoid
};

struct MatrixDivisorReport {
  std::vector<std::int64_t> primes;  // prime multiset of |det A|
  std::size_t candidates = 0;        // (n + 1)^(#primes) diagonal forms
  std::vector<MatrixDivisorClass> classes;
};
// Candidates diag(prod I1, .., prod In) for pairwise disjoint sub-multisets of
// the primes of det A, deduplicated up to two-sided associates (equal Smith
// form).
MatrixDivisorReport matrix_divisor_classes(const IntMatrix& a, std::int64_t det_bound = 1'000'000'000'000LL);

// B | A (A = X B Y with X, Y integer matrices) iff s_i(B) | s_i(A) for all i.
bool matrix_divides(const IntMatrix& b, const IntMatrix& a);

struct MatrixLengths {
  std::int64_t abs_det = 0;
  LengthSet lengths;              // {Omega(|det A|)} through the determinant
  std::vector<IntMatrix> witness;  // factors with prime |det| whose product is A
};
MatrixLengths matrix_length_set(const IntMatrix& a, std::int64_t det_bound = 1'000'000'000'000LL);

// Searches unimodular X, Y with entries in [-bound, bound] and X B Y = C.
// Exhaustive; intended for 2x2 cross-checks.
bool associated_by_search(const IntMatrix& b, const IntMatrix& c, std::int64_t bound);

IntMatrix matrix_from_json_file(const std::string& path);

}  // namespace premon
