#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "premon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = premon::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("describe") {
  const auto r = run({"describe", "zn:4"});
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  CHECK(j["units"] == nlohmann::json::array({1, 3}));
  CHECK(j["atoms_text"]["2"] == "{2}");
  CHECK(j["flags"]["weakly_positive"] == true);
  const auto t = parse(run({"describe", "coarseN:20"}));
  CHECK(t["atoms_text"]["2"] == "{1}");
  CHECK(t["flags"]["positive"] == true);
  CHECK(t["flags"]["strongly_positive"] == false);
  CHECK(run({"describe", "zn:1"}).code == 0);
  CHECK(run({"describe", "zn:4", "--format", "dot"}).out.rfind("digraph", 0) == 0);
}

TEST_CASE("factorize") {
  auto j = parse(run({"factorize", "zn:8", "0", "--minimal"}));
  CHECK(j["minimal"]["classes"].size() == 1);
  CHECK(j["minimal"]["classes"][0]["length"] == 3);
  CHECK(j["minimal"]["certified"] == true);
  CHECK_FALSE(j.contains("factorizations"));
  j = parse(run({"factorize", "zn:4", "2"}));
  CHECK(j["factorizations"]["words"] == nlohmann::json::array({nlohmann::json::array({2})}));
  j = parse(run({"factorize", "zn:4", "3"}));
  CHECK(j["unit"] == true);
  CHECK(j["factorizations"]["count"] == 0);
  CHECK(run({"factorize", "zn:4", "9"}).code == 3);
  // Family elements outside the default window build their own window.
  j = parse(run({"factorize", "numerical:2,3", "31", "--minimal"}));
  CHECK(j["atomic_lengths"]["text"] == "{11, 12, 13, 14, 15}");
}

TEST_CASE("classify") {
  auto j = parse(run({"classify", "zn:4"}));
  CHECK(j["summary"]["UmF-atomic"] == true);
  CHECK(j["summary"]["BF-atomic"] == false);
  j = parse(run({"classify", "numerical:2,3"}));
  CHECK(j["summary"]["FF-atomic"] == true);
  j = parse(run({"classify", "powerN:3", "--element", "{0,1}"}));
  CHECK(j["elements"].size() == 1);
  j = parse(run({"classify", "zn:4", "--atomic-mode", "within"}));
  CHECK_FALSE(j["summary"].contains("UmF-atomic-paper"));
  CHECK(j["summary"].contains("UmF-atomic"));
}

TEST_CASE("verify") {
  auto r = run({"verify", "zn:4", "zn:8", "zn:9"});
  CHECK(r.code == 0);
  CHECK(parse(r)["ok"] == true);
  r = run({"verify", "--random", "20", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(parse(r)["random"]["diagram_violations"] == 0);
  r = run({"verify", "present:xy:x2=yx2y:10"});
  CHECK(r.code == 0);
  const auto j = parse(r);
  CHECK(j["instances"][0]["label"] == "bounded evidence, not a certificate");
  CHECK(j["instances"][0]["non_shrinking_chain"]["length"] >= 3);
}

TEST_CASE("determinism") {
  const auto a = run({"verify", "--random", "15", "--seed", "3", "--threads", "1"});
  const auto b = run({"verify", "--random", "15", "--seed", "3", "--threads", "4"});
  CHECK(a.out == b.out);
  CHECK(run({"classify", "zn:12", "--threads", "3"}).out == run({"classify", "zn:12"}).out);
}

TEST_CASE("exit codes and config files") {
  CHECK(run({"describe", "bogus:1"}).code == 2);
  CHECK(run({"describe", "zn:4", "--degree", "1"}).code == 2);
  CHECK(run({"describe", "zn:4", "--format", "yaml"}).code == 2);
  CHECK(run({"describe"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"describe", "present:xy:x2=yx2y:3"}).code == 2);

  const std::string bad = "premon_test_bad_config.json", good = "premon_test_config.json";
  std::ofstream(bad) << R"({"instances": ["zn:4"], "colour": "blue"})";
  std::ofstream(good) << R"({"instances": ["zn:4"], "max_len": 3, "format": "text"})";
  const auto r = run({"describe", "--config", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("colour") != std::string::npos);
  const auto g = run({"describe", "zn:8", "--config", good});
  CHECK(g.code == 0);
  CHECK(g.out.rfind("instance: zn:8", 0) == 0);  // the positional argument overrides the file
  std::remove(bad.c_str());
  std::remove(good.c_str());
}
