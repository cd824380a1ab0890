#pragma once

#include <cstdint>
#include <random>

namespace premon {

// Seeded generator whose draws are identical on every standard library:
// std::uniform_int_distribution is implementation-defined, so ranges are
// carved out of raw mt19937_64 output by rejection instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do r = eng_();
    while (r >= limit);
    return r % bound;
  }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace premon
