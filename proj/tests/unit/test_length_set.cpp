#include <doctest.h>

#include "premon/length_set.hpp"

using namespace premon;

TEST_CASE("finite length sets") {
  const LengthSet s = LengthSet::finite({3, 1, 3});
  CHECK(s.is_finite());
  CHECK(s.finite_part() == std::vector<std::uint64_t>{1, 3});
  CHECK(s.max() == 3U);
  CHECK(s.to_string() == "{1, 3}");
  CHECK(LengthSet::finite({}).empty());
  CHECK(LengthSet::finite({2}).singleton());
}

TEST_CASE("eventually periodic sets are canonical") {
  // {k >= 3} written with a redundant prefix and a doubled period.
  std::vector<bool> prefix{false, false, false, true, true};
  const LengthSet a = LengthSet::from_pattern(prefix, 5, {true, true});
  const LengthSet b = LengthSet::periodic({}, 3, 1, {0});
  CHECK(a == b);
  CHECK(a.offset() == 3);
  CHECK(a.period() == 1);
  CHECK(a.to_string() == "{k >= 3}");
  CHECK(a.contains(1000));
  CHECK_FALSE(a.contains(2));
  CHECK_FALSE(a.max().has_value());
  CHECK(a.min() == 3U);
}

TEST_CASE("periodic membership") {
  // Even numbers from 4 on, plus 1.
  const LengthSet s = LengthSet::from_pattern({false, true, false, false}, 4, {true, false});
  CHECK(s.members_upto(10) == std::vector<std::uint64_t>{1, 4, 6, 8, 10});
  CHECK(s.period() == 2);
  CHECK_FALSE(s.is_finite());
}
