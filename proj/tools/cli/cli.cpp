#include "cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "premon/classification.hpp"
#include "premon/families.hpp"
#include "premon/io.hpp"
#include "premon/irreducibles.hpp"
#include "premon/parallel.hpp"
#include "premon/presentation.hpp"
#include "premon/random_instances.hpp"
#include "premon/snf.hpp"
#include "premon/verify.hpp"

namespace premon::cli {

namespace {

const std::set<std::string> kConfigKeys = {"instances", "preorder", "roots",  "max_len",  "degrees",
                                           "atomic_mode", "format", "seed",   "threads",  "random",
                                           "out",       "elements", "minimal"};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

json members_json(const Bitset& b) {
  json a = json::array();
  b.for_each([&](Index x) { a.push_back(x); });
  return a;
}

// ------------------------------------------------------------ loading

Instance load(const RunConfig& c, const std::string& spec, std::vector<std::string> roots = {}) {
  if (roots.empty()) roots = c.roots;
  Instance inst = load_instance(spec, roots);
  if (!c.preorder.empty()) {
    if (inst.is_window()) throw InputError("--preorder applies to finite carriers only");
    inst.premonoid = Premonoid(inst.premonoid.monoid, preorder_from_json(read_json_file(c.preorder), inst.premonoid.monoid));
  }
  return inst;
}

// Loads a family instance around the named elements when the user gave no roots.
Instance load_around(const RunConfig& c, const std::string& spec, const std::vector<std::string>& names) {
  Instance inst = load(c, spec);
  if (!inst.is_window() || !c.roots.empty() || names.empty()) return inst;
  return load(c, spec, names);
}

json base_json(const Instance& inst) {
  json j;
  j["instance"] = inst.spec;
  j["size"] = inst.premonoid.size();
  j["window"] = inst.is_window();
  j["labels"] = inst.premonoid.monoid.labels();
  return j;
}

IntMatrix load_matrix(const std::string& spec) { return matrix_from_json_file(spec.substr(7)); }

// present:<alphabet>:<relations>:<L>
BoundedCongruence load_presentation(const std::string& spec) {
  const std::string rest = spec.substr(8);
  const auto a = rest.find(':'), b = rest.rfind(':');
  if (a == std::string::npos || a == b) throw InputError("expected present:<alphabet>:<relations>:<L>");
  std::size_t bound = 0;
  try {
    std::size_t used = 0;
    bound = std::stoul(rest.substr(b + 1), &used);
    if (used != rest.size() - b - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw InputError("presentation bound L must be a non-negative integer");
  }
  return BoundedCongruence(parse_presentation(rest.substr(0, a), rest.substr(a + 1, b - a - 1)), bound);
}

json chain_json(const DivisibilityChain& c) {
  return {{"length", c.classes.size()}, {"classes", c.classes}, {"representatives", c.representatives}};
}

json presentation_json(const BoundedCongruence& c, const PresentationEvidence& ev) {
  json j;
  j["instance"] = "present";
  j["alphabet"] = c.presentation().alphabet;
  json rels = json::array();
  for (const auto& [l, r] : c.presentation().relations)
    rels.push_back({{"lhs", c.text(l)}, {"rhs", c.text(r)}, {"merged", c.same_class(l, r)}});
  j["relations"] = std::move(rels);
  j["bound"] = ev.bound;
  j["words"] = ev.words;
  j["classes"] = ev.classes;
  j["longest_chain"] = chain_json(ev.longest_chain);
  j["non_shrinking_chain"] = chain_json(ev.non_shrinking_chain);
  json cyc = json::array();
  for (const auto& [w, f] : ev.cycles) cyc.push_back({{"word", w}, {"factor", f}});
  j["cycles"] = std::move(cyc);
  j["label"] = ev.label;
  return j;
}

json matrix_json(const IntMatrix& a) {
  json j;
  j["instance"] = "matrix";
  j["matrix"] = a;
  const SnfResult s = snf(a);
  j["snf"] = {{"u", s.u}, {"v", s.v}, {"d", s.d}, {"invariants", s.diagonal()}};
  const MatrixLengths len = matrix_length_set(a);
  j["abs_det"] = len.abs_det;
  j["lengths"] = to_json(len.lengths);
  j["witness"] = len.witness;
  const MatrixDivisorReport div = matrix_divisor_classes(a);
  json cls = json::array();
  for (const auto& c : div.classes)
    cls.push_back({{"diagonal", c.diagonal}, {"invariants", c.invariants}, {"candidates", c.candidates}, {"divides", c.divides}});
  j["divisors"] = {{"primes", div.primes}, {"candidates", div.candidates}, {"classes", std::move(cls)}};
  return j;
}

// ------------------------------------------------------------ text rendering

std::string flag_line(const json& flags) {
  std::string s;
  for (const auto& [k, v] : flags.items())
    if (v.is_boolean()) s += (s.empty() ? "" : " ") + k + "=" + (v.get<bool>() ? "yes" : "no");
  return s;
}

void render_text(const json& j, std::ostream& out, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& [k, v] : j.items()) {
    if (k == "labels") continue;
    if (v.is_object()) {
      if (v.contains("text") && v["text"].is_string() && v.size() <= 6) {
        out << pad << k << ": " << v["text"].get<std::string>() << '\n';
      } else if (std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_boolean(); })) {
        out << pad << k << ": " << flag_line(v) << '\n';
      } else {
        out << pad << k << ":\n";
        render_text(v, out, depth + 1);
      }
    } else if (v.is_array() && !v.empty() && v.front().is_object() && v.front().contains("status")) {
      out << pad << k << ":\n";
      for (const auto& e : v) {
        std::string line = e["status"].get<std::string>();
        line.resize(8, ' ');
        out << pad << "  " << line << e["name"].get<std::string>();
        if (e.contains("detail")) out << " (" << e["detail"].get<std::string>() << ")";
        out << '\n';
      }
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << k << ":\n";
      for (const auto& e : v) {
        out << pad << "  -\n";
        render_text(e, out, depth + 2);
      }
    } else {
      out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

void emit(const RunConfig& c, const json& j, const std::string& dot, std::ostream& out) {
  std::ostringstream buf;
  if (c.format == "json") buf << j.dump(2) << '\n';
  else if (c.format == "text") render_text(j, buf);
  else if (dot.empty()) throw InputError("dot output is available for describe and factorize only");
  else buf << dot;
  if (c.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + c.out);
    f << buf.str();
  }
}

// ------------------------------------------------------------ commands

json describe_json(const RunConfig& c, const Instance& inst) {
  const Premonoid& p = inst.premonoid;
  json j = base_json(inst);
  j["identity"] = p.monoid.identity();
  j["complete_table"] = p.monoid.complete();
  const Bitset units = preorder_units(p);
  j["units"] = members_json(units);
  j["units_text"] = set_text(p.monoid, units);
  j["non_units"] = members_json(preorder_non_units(p));
  j["structure"] = to_json(structure_flags(p.monoid));
  j["flags"] = to_json(premonoid_flags(p));
  j["heights"] = heights(p);
  j["heights_exact"] = inst.heights_exact;
  const IrreducibleReport ir = irreducible_report(p, c.degrees);
  j["quarks_text"] = set_text(p.monoid, ir.quarks);
  json irr_text = json::object(), at_text = json::object();
  for (unsigned s : c.degrees) {
    irr_text[std::to_string(s)] = set_text(p.monoid, ir.irreducibles.at(s));
    at_text[std::to_string(s)] = set_text(p.monoid, ir.atoms.at(s));
  }
  j["irreducibles_text"] = std::move(irr_text);
  j["atoms_text"] = std::move(at_text);
  j["irreducible_report"] = to_json(ir);
  return j;
}

int cmd_describe(const RunConfig& c, std::ostream& out) {
  if (c.instances.size() != 1) throw InputError("describe takes exactly one instance");
  const std::string& spec = c.instances[0];
  if (starts_with(spec, "matrix:")) {
    emit(c, matrix_json(load_matrix(spec)), "", out);
    return ok;
  }
  if (starts_with(spec, "present:")) {
    const BoundedCongruence bc = load_presentation(spec);
    emit(c, presentation_json(bc, explore(bc)), "", out);
    return ok;
  }
  const Instance inst = load(c, spec);
  emit(c, describe_json(c, inst), c.format == "dot" ? condensation_dot(inst.premonoid) : "", out);
  return ok;
}

json minimal_text(const FiniteMonoid& m, const MinimalResult& r) {
  json j = to_json(r);
  json t = json::array();
  for (const auto& cl : r.classes) t.push_back(word_text(m, cl.representative));
  j["text"] = std::move(t);
  return j;
}

int cmd_factorize(const RunConfig& c, const std::string& element, std::ostream& out) {
  if (c.instances.size() != 1) throw InputError("factorize takes exactly one instance");
  const std::string& spec = c.instances[0];
  if (starts_with(spec, "matrix:")) {
    const IntMatrix a = load_matrix(spec);
    const MatrixLengths len = matrix_length_set(a);
    emit(c, {{"instance", "matrix"}, {"matrix", a}, {"lengths", to_json(len.lengths)}, {"witness", len.witness}}, "", out);
    return ok;
  }
  if (element.empty()) throw InputError("factorize needs an element");
  const Instance inst = load_around(c, spec, {element});
  const Index x = inst.find(element);
  const Premonoid& p = inst.premonoid;
  const FactorizationEngine engine(p);
  json j = base_json(inst);
  j["x"] = x;
  j["label"] = p.monoid.label(x);
  const bool unit = !engine.non_units().test(x);
  j["unit"] = unit;
  j["irreducibles"] = members_json(engine.letters(Alphabet::irreducibles));
  j["atoms"] = members_json(engine.letters(Alphabet::atoms));
  j["lengths"] = to_json(engine.length_set(x, Alphabet::irreducibles));
  j["atomic_lengths"] = to_json(engine.length_set(x, Alphabet::atoms));
  if (!c.minimal) {
    constexpr std::size_t kMaxWords = 10'000;
    FactorizationStream s = engine.enumerate(x, c.max_len);
    json words = json::array(), text = json::array();
    bool truncated = false;
    while (auto w = s.next()) {
      if (words.size() == kMaxWords) {
        truncated = true;
        break;
      }
      words.push_back(to_json(*w));
      text.push_back(word_text(p.monoid, *w));
    }
    j["factorizations"] = {{"max_len", c.max_len}, {"count", words.size()}, {"truncated", truncated},
                           {"words", std::move(words)}, {"text", std::move(text)}};
  }
  j["minimal"] = minimal_text(p.monoid, engine.minimal(x, AtomicMode::none));
  if (c.atomic_mode != "paper") j["minimal_atomic_within"] = minimal_text(p.monoid, engine.minimal(x, AtomicMode::within_atomic));
  if (c.atomic_mode != "within") j["minimal_atomic_paper"] = minimal_text(p.monoid, engine.minimal(x, AtomicMode::paper_literal));
  emit(c, j, c.format == "dot" ? layer_automaton_dot(p.monoid, engine.layers(Alphabet::irreducibles)) : "", out);
  return ok;
}

bool column_shown(std::string_view name, const std::string& mode) {
  const bool paper = name.ends_with("-paper");
  const bool within = !paper && name.find("mF-atomic") != std::string_view::npos;
  if (mode == "within") return !paper;
  if (mode == "paper") return !within;
  return true;
}

void filter_columns(json& holds, const std::string& mode) {
  json kept = json::object();
  for (const auto& [k, v] : holds.items())
    if (column_shown(k, mode)) kept[k] = v;
  holds = std::move(kept);
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  if (c.instances.size() != 1) throw InputError("classify takes exactly one instance");
  const Instance inst = load_around(c, c.instances[0], c.elements);
  ClassifyOptions opts;
  opts.threads = c.threads;
  for (const auto& e : c.elements) opts.only.push_back(inst.find(e));
  const FactorizationEngine engine(inst.premonoid);
  const ClassificationReport rep = classify(engine, opts);
  json j = base_json(inst);
  j["atomic_mode"] = c.atomic_mode;
  j["scope"] = c.elements.empty() ? json("all non-units") : json(opts.only);
  json r = to_json(rep);
  filter_columns(r["verdicts"], c.atomic_mode);
  for (auto& v : r["verdicts"])
    if (v.contains("witness")) v["witness_text"] = inst.premonoid.monoid.label(v["witness"].get<Index>());
  for (auto& e : r["elements"]) {
    filter_columns(e["holds"], c.atomic_mode);
    if (c.atomic_mode == "paper") e.erase("minimal_atomic_within");
    if (c.atomic_mode == "within") e.erase("minimal_atomic_paper");
  }
  json summary = json::object();
  for (const auto& [k, v] : r["verdicts"].items()) summary[k] = v["holds"];
  j["summary"] = std::move(summary);
  for (auto& [k, v] : r.items()) j[k] = v;
  emit(c, j, "", out);
  return ok;
}

json check_json(const Check& ch) {
  json j = {{"name", ch.name}, {"status", to_string(ch.status)}};
  if (!ch.detail.empty()) j["detail"] = ch.detail;
  return j;
}

json verify_presentation(const std::string& spec, bool& all_ok) {
  const BoundedCongruence bc = load_presentation(spec);
  const PresentationEvidence ev = explore(bc);
  json j = presentation_json(bc, ev);
  j["instance"] = spec;
  std::vector<Check> checks;
  bool merged = true;
  for (const auto& [l, r] : bc.presentation().relations) merged = merged && bc.same_class(l, r);
  checks.push_back(merged ? Check{"relations merged", Check::Status::pass, ""}
                          : Check{"relations merged", Check::Status::fail, "a relation's sides stayed apart"});
  const auto& ch = ev.non_shrinking_chain;
  if (ch.classes.size() >= 3) {
    std::string d;
    for (const auto& r : ch.representatives) d += (d.empty() ? "" : " > ") + r;
    checks.push_back({"descending divisibility chain (evidence)", Check::Status::pass, d});
  } else {
    checks.push_back({"descending divisibility chain (evidence)", Check::Status::skipped, "no chain of length 3 within the bound"});
  }
  json cs = json::array();
  for (const auto& c : checks) {
    cs.push_back(check_json(c));
    all_ok = all_ok && c.status != Check::Status::fail;
  }
  j["checks"] = std::move(cs);
  return j;
}

json verify_matrix(const std::string& spec, bool& all_ok) {
  const IntMatrix a = load_matrix(spec);
  json j = matrix_json(a);  // snf() re-checks its own invariants and throws if one fails
  j["instance"] = spec;
  const MatrixLengths len = matrix_length_set(a);
  const std::size_t omega = prime_factors(len.abs_det).size();
  const bool lengths_ok = len.lengths == (omega ? LengthSet::finite({omega}) : LengthSet::finite({}));
  json cs = json::array();
  cs.push_back(check_json({"smith normal form invariants", Check::Status::pass, ""}));
  cs.push_back(check_json(lengths_ok ? Check{"length set from the determinant", Check::Status::pass, ""}
                                     : Check{"length set from the determinant", Check::Status::fail, len.lengths.to_string()}));
  all_ok = all_ok && lengths_ok;
  j["checks"] = std::move(cs);
  return j;
}

json verify_instance(const RunConfig& c, const std::string& spec, bool& all_ok) {
  if (starts_with(spec, "present:")) return verify_presentation(spec, all_ok);
  if (starts_with(spec, "matrix:")) return verify_matrix(spec, all_ok);
  const Instance inst = load(c, spec);
  VerifyOptions opts;
  opts.threads = c.threads;
  opts.seed = c.seed;
  opts.window = inst.is_window();
  opts.heights_exact = inst.heights_exact;
  const VerifyReport rep = verify_suite(inst.premonoid, opts);
  json j = {{"instance", spec}, {"size", inst.premonoid.size()}, {"window", inst.is_window()}};
  json cs = json::array();
  for (const auto& ch : rep.checks) cs.push_back(check_json(ch));
  j["checks"] = std::move(cs);
  j["ok"] = rep.ok();
  all_ok = all_ok && rep.ok();
  return j;
}

json verify_random(const RunConfig& c, bool& all_ok) {
  struct Slot {
    std::string description;
    VerifyReport report;
  };
  std::vector<Slot> slots(c.random);
  // Instances come from one seeded stream, generated up front so the set
  // does not depend on the thread count.
  Rng rng(c.seed);
  std::vector<Premonoid> ps;
  for (auto& s : slots) {
    RandomPremonoid r = random_premonoid(rng, 6);
    s.description = r.description;
    ps.push_back(std::move(r.premonoid));
  }
  parallel_for(slots.size(), c.threads, [&](std::size_t i) {
    VerifyOptions opts;
    opts.seed = c.seed + i;
    slots[i].report = verify_suite(ps[i], opts);
  });
  std::map<std::string, std::array<std::size_t, 3>> tally;
  std::vector<std::string> order;
  json failures = json::array();
  std::size_t violations = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (const auto& ch : slots[i].report.checks) {
      if (!tally.count(ch.name)) order.push_back(ch.name);
      ++tally[ch.name][static_cast<std::size_t>(ch.status)];
      if (ch.status == Check::Status::fail) {
        failures.push_back({{"index", i}, {"description", slots[i].description}, {"check", check_json(ch)}});
        if (ch.name == "implication diagram") ++violations;
      }
    }
    all_ok = all_ok && slots[i].report.ok();
  }
  json t = json::array();
  for (const auto& name : order)
    t.push_back({{"name", name}, {"pass", tally[name][0]}, {"fail", tally[name][1]}, {"skipped", tally[name][2]}});
  return {{"count", c.random}, {"seed", c.seed}, {"diagram_violations", violations}, {"checks", std::move(t)},
          {"failures", std::move(failures)}};
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.instances.empty() && c.random == 0) throw InputError("verify needs instances or --random N");
  std::vector<std::string> specs;
  for (const auto& s : c.instances) {
    if (s == "builtins") specs.insert(specs.end(), builtin_specs().begin(), builtin_specs().end());
    else specs.push_back(s);
  }
  bool all_ok = true;
  json j;
  j["seed"] = c.seed;
  json insts = json::array();
  for (const auto& s : specs) insts.push_back(verify_instance(c, s, all_ok));
  j["instances"] = std::move(insts);
  if (c.random) j["random"] = verify_random(c, all_ok);
  j["ok"] = all_ok;
  emit(c, j, "", out);
  return all_ok ? ok : verification_failure;
}

}  // namespace

void RunConfig::validate() const {
  for (unsigned s : degrees)
    if (s < 2) throw InputError("degree entries must be at least 2");
  if (degrees.empty()) throw InputError("at least one degree is required");
  if (atomic_mode != "paper" && atomic_mode != "within" && atomic_mode != "both")
    throw InputError("atomic mode must be paper, within or both");
  if (format != "json" && format != "dot" && format != "text") throw InputError("format must be json, dot or text");
  if (threads == 0) throw InputError("thread count must be positive");
}

RunConfig load_config(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_object()) throw InputError(path + ": config must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!kConfigKeys.count(k)) throw InputError(path + ": unknown config key '" + k + "'");
  RunConfig c;
  try {
    if (j.contains("instances")) {
      if (j["instances"].is_string()) c.instances = {j["instances"].get<std::string>()};
      else c.instances = j["instances"].get<std::vector<std::string>>();
    }
    if (j.contains("preorder")) c.preorder = j["preorder"].get<std::string>();
    if (j.contains("roots")) c.roots = j["roots"].get<std::vector<std::string>>();
    if (j.contains("max_len")) {
      if (j["max_len"].get<long long>() < 0) throw InputError(path + ": max_len must be non-negative");
      c.max_len = j["max_len"].get<std::size_t>();
    }
    if (j.contains("degrees")) c.degrees = j["degrees"].get<std::vector<unsigned>>();
    if (j.contains("atomic_mode")) c.atomic_mode = j["atomic_mode"].get<std::string>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("threads")) c.threads = j["threads"].get<unsigned>();
    if (j.contains("random")) c.random = j["random"].get<std::size_t>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("elements")) c.elements = j["elements"].get<std::vector<std::string>>();
    if (j.contains("minimal")) c.minimal = j["minimal"].get<bool>();
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  c.validate();
  return c;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"premon: factorization theory of finite and locally finite premonoids"};
  app.require_subcommand(1);
  RunConfig flags;
  std::string config_path, element, single;
  std::vector<std::string> positional;
  long long max_len = 6;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration (flags override it)");
    sub->add_option("--preorder", flags.preorder, "preorder JSON file for a finite carrier");
    sub->add_option("--root", flags.roots, "window root for locally finite families (repeatable)");
    sub->add_option("--max-len", max_len, "word length bound for enumeration");
    sub->add_option("--degree", flags.degrees, "irreducibility degrees (repeatable)");
    sub->add_option("--atomic-mode", flags.atomic_mode, "paper | within | both");
    sub->add_option("--format", flags.format, "json | dot | text");
    sub->add_option("--seed", flags.seed, "seed for randomized checks");
    sub->add_option("--threads", flags.threads, "worker threads");
    sub->add_option("--out", flags.out, "write the report to this file");
  };
  CLI::App* describe = app.add_subcommand("describe", "flags, units, quarks, irreducibles and atoms");
  describe->add_option("instance", single, "instance spec (or \"instances\" in the config)");
  add_common(describe);
  CLI::App* factorize = app.add_subcommand("factorize", "factorizations, length sets and minimal classes of one element");
  factorize->add_option("instance", single, "instance spec (or \"instances\" in the config)");
  factorize->add_option("element", element, "element label, index or family syntax");
  factorize->add_flag("--minimal", flags.minimal, "report minimal classes only");
  add_common(factorize);
  CLI::App* classify_cmd = app.add_subcommand("classify", "factorization classification");
  classify_cmd->add_option("instance", single, "instance spec (or \"instances\" in the config)");
  classify_cmd->add_option("--element", flags.elements, "restrict to these elements (repeatable)");
  add_common(classify_cmd);
  CLI::App* verify = app.add_subcommand("verify", "structural checks on instances and random premonoids");
  verify->add_option("instances", positional, "instance specs, or 'builtins'");
  verify->add_option("--random", flags.random, "also check N seeded random premonoids");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
    auto given = [&](const char* name) { return sub->count(name) > 0; };
    if (!single.empty()) c.instances = {single};
    if (!positional.empty()) c.instances = positional;
    if (given("--preorder")) c.preorder = flags.preorder;
    if (given("--root")) c.roots = flags.roots;
    if (given("--max-len")) {
      if (max_len < 0) throw InputError("--max-len must be non-negative");
      c.max_len = static_cast<std::size_t>(max_len);
    }
    if (given("--degree")) c.degrees = flags.degrees;
    if (given("--atomic-mode")) c.atomic_mode = flags.atomic_mode;
    if (given("--format")) c.format = flags.format;
    if (given("--seed")) c.seed = flags.seed;
    if (given("--threads")) c.threads = flags.threads;
    if (given("--out")) c.out = flags.out;
    if (sub == factorize && given("--minimal")) c.minimal = true;
    if (sub == classify_cmd && given("--element")) c.elements = flags.elements;
    if (sub == verify && given("--random")) c.random = flags.random;
    c.validate();
    if (sub != verify && c.instances.size() != 1)
      throw InputError(sub->get_name() + " takes exactly one instance, on the command line or in the config");

    if (sub == describe) return cmd_describe(c, out);
    if (sub == factorize) return cmd_factorize(c, element, out);
    if (sub == classify_cmd) return cmd_classify(c, out);
    return cmd_verify(c, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return input_error;
  } catch (const QueryError& e) {
    err << "query error: " << e.what() << '\n';
    return query_error;
  } catch (const NonAssociative& e) {
    err << "input error: " << e.what() << '\n';
    return input_error;
  } catch (const BadIdentity& e) {
    err << "input error: " << e.what() << '\n';
    return input_error;
  } catch (const ShapeError& e) {
    err << "input error: " << e.what() << '\n';
    return input_error;
  } catch (const Error& e) {
    // Library preconditions that the query could not meet (singular matrix,
    // budgets, non-computable heights).
    err << "query error: " << e.what() << '\n';
    return query_error;
  }
}

}  // namespace premon::cli
