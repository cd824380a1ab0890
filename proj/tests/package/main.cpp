// Builds against the installed package only.
#include <iostream>

#include "premon/snf.hpp"

int main() {
  const auto d = premon::snf({{2, 0}, {0, 3}}).diagonal();
  std::cout << d[0] << ' ' << d[1] << '\n';
  return d == std::vector<std::int64_t>{1, 6} ? 0 : 1;
}
