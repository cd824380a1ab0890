#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace premon::cli {

enum ExitCode : int { ok = 0, input_error = 2, query_error = 3, verification_failure = 4 };

// Everything one run needs. A JSON config file supplies defaults; flags given
// on the command line override it.
struct RunConfig {
  std::vector<std::string> instances;
  std::string preorder;            // preorder JSON file, replaces the default preorder
  std::vector<std::string> roots;  // window roots for locally finite families
  std::size_t max_len = 6;
  std::vector<unsigned> degrees{2};
  std::string atomic_mode = "both";  // paper | within | both
  std::string format = "json";       // json | dot | text
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::size_t random = 0;
  std::string out;
  std::vector<std::string> elements;
  bool minimal = false;

  void validate() const;  // throws InputError
};

// Reads a config file; unknown keys are rejected.
RunConfig load_config(const std::string& path);

// Entry point behind the binary; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace premon::cli
