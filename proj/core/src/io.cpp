#include "premon/io.hpp"

#include <fstream>
#include <sstream>

namespace premon {

namespace {

json members(const Bitset& s) {
  json a = json::array();
  s.for_each([&](Index x) { a.push_back(x); });
  return a;
}

std::vector<Bitset> bool_matrix(const json& rel, Index n) {
  if (!rel.is_array() || rel.size() != n) throw InputError("relation matrix must be " + std::to_string(n) + " rows");
  std::vector<Bitset> out(n, Bitset(n));
  for (Index i = 0; i < n; ++i) {
    if (!rel[i].is_array() || rel[i].size() != n) throw InputError("relation row " + std::to_string(i) + " has wrong length");
    for (Index j = 0; j < n; ++j) {
      const json& v = rel[i][j];
      if (v.is_boolean() ? v.get<bool>() : v.get<int>() != 0) out[i].set(j);
    }
  }
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

FiniteMonoid monoid_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto e = j.at("identity").get<Index>();
    const json& t = j.at("table");
    if (!t.is_array() || t.size() != n) throw ShapeError("table must have n rows");
    std::vector<Index> flat;
    flat.reserve(n * n);
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != n) throw ShapeError("every table row must have n entries");
      for (const auto& v : row) flat.push_back(v.get<Index>());
    }
    FiniteMonoid m = FiniteMonoid::load(n, e, std::move(flat));
    if (j.contains("labels")) m.set_labels(j.at("labels").get<std::vector<std::string>>());
    return m;
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed monoid JSON: ") + ex.what());
  }
}

json monoid_to_json(const FiniteMonoid& m) {
  json j;
  j["n"] = m.size();
  j["identity"] = m.identity();
  json rows = json::array();
  for (Index i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.size(); ++k) {
      const Index v = m.mul(i, k);
      if (v == kAbsent) row.push_back(nullptr);
      else row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["labels"] = m.labels();
  return j;
}

FiniteMonoid load_monoid_file(const std::string& path) { return monoid_from_json(read_json_file(path)); }

PreorderRel preorder_from_json(const json& j, const FiniteMonoid& m) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const Index n = m.size();
    if (kind == "divisibility") return divisibility_preorder(m);
    if (kind == "matrix") return PreorderRel::closure_of(bool_matrix(j.at("rel"), n), PreorderKind::matrix);
    if (kind == "phi") {
      std::vector<Index> a = j.at("A").get<std::vector<Index>>();
      for (Index x : a)
        if (x >= n) throw InputError("phi: element out of range");
      return phi_preorder(m, a).rel;
    }
    if (kind == "pullback") {
      const auto phi = j.at("phi").get<std::vector<Index>>();
      if (phi.size() != n) throw InputError("pullback: phi must have one entry per element");
      const json& c = j.at("codomain");
      PreorderRel cod;
      if (c.at("kind") == "chain") {
        const auto k = c.at("n").get<Index>();
        std::vector<Bitset> up(k, Bitset(k));
        for (Index a = 0; a < k; ++a)
          for (Index b = a; b < k; ++b) up[a].set(b);
        cod = PreorderRel::trusted(std::move(up), PreorderKind::matrix);
      } else if (c.at("kind") == "matrix") {
        cod = PreorderRel::closure_of(bool_matrix(c.at("rel"), static_cast<Index>(c.at("rel").size())),
                                      PreorderKind::matrix);
      } else {
        throw InputError("pullback codomain must be a chain or a matrix");
      }
      for (Index v : phi)
        if (v >= cod.size()) throw InputError("pullback: phi value outside the codomain");
      return pullback_preorder(phi, cod);
    }
    throw InputError("unknown preorder kind '" + kind + "'");
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed preorder JSON: ") + ex.what());
  }
}

json to_json(const LengthSet& s) {
  json j;
  j["finite"] = s.finite_part();
  j["offset"] = s.offset();
  j["period"] = s.period();
  j["residues"] = s.residues();
  j["text"] = s.to_string();
  return j;
}

json to_json(const FactorWord& w) { return w.letters; }

json to_json(const ClassVector& v) {
  json a = json::array();
  for (const auto& [c, k] : v.entries) a.push_back({c, k});
  return a;
}

json to_json(const MinimalResult& r) {
  json j;
  json cls = json::array();
  for (const auto& c : r.classes)
    cls.push_back({{"vector", to_json(c.vector)}, {"length", c.vector.total()}, {"representative", to_json(c.representative)}});
  j["classes"] = std::move(cls);
  j["certified"] = r.certified;
  j["length_cap"] = r.length_cap;
  j["lengths"] = to_json(r.lengths());
  return j;
}

json to_json(const StructureFlags& f) {
  return {{"commutative", f.commutative}, {"dedekind_finite", f.dedekind_finite},
          {"unit_cancellative", f.unit_cancellative}, {"acyclic", f.acyclic},
          {"left_duo", f.left_duo}, {"right_duo", f.right_duo}, {"duo", f.duo}, {"reduced", f.reduced}};
}

json to_json(const PremonoidFlags& f) {
  return {{"preordered", f.preordered},         {"strongly_preordered", f.strongly_preordered},
          {"positive", f.positive},             {"strongly_positive", f.strongly_positive},
          {"weakly_positive", f.weakly_positive}, {"artinian", f.artinian},
          {"strongly_artinian", f.strongly_artinian}, {"artinian_reason", f.artinian_reason}};
}

json to_json(const IrreducibleReport& r) {
  json j;
  j["quarks"] = members(r.quarks);
  json irr = json::object(), at = json::object();
  for (const auto& [s, b] : r.irreducibles) irr[std::to_string(s)] = members(b);
  for (const auto& [s, b] : r.atoms) at[std::to_string(s)] = members(b);
  j["irreducibles"] = std::move(irr);
  j["atoms"] = std::move(at);
  j["orbits"] = r.orbits;
  return j;
}

json to_json(const ElementProfile& e) {
  auto count = [](const std::optional<std::size_t>& n) -> json {
    if (n) return *n;
    return "infinite";
  };
  json j;
  j["x"] = e.x;
  j["lengths"] = to_json(e.lengths);
  j["atomic_lengths"] = to_json(e.atomic_lengths);
  j["classes"] = count(e.vectors);
  j["atomic_classes"] = count(e.atomic_vectors);
  j["minimal"] = to_json(e.minimal);
  j["minimal_atomic_within"] = to_json(e.minimal_within);
  j["minimal_atomic_paper"] = to_json(e.minimal_paper);
  json h = json::object();
  for (std::size_t p = 0; p < kPropertyCount; ++p) h[std::string(property_name(static_cast<Property>(p)))] = e.holds[p];
  j["holds"] = std::move(h);
  j["exact"] = e.exact;
  return j;
}

json to_json(const ClassificationReport& r) {
  json j;
  json v = json::object();
  for (std::size_t p = 0; p < kPropertyCount; ++p) {
    const Verdict& d = r.verdicts[p];
    json item = {{"holds", d.holds}};
    if (!d.holds) {
      item["witness"] = d.witness;
      item["reason"] = d.reason;
    }
    v[std::string(property_name(static_cast<Property>(p)))] = std::move(item);
  }
  j["verdicts"] = std::move(v);
  j["vacuous"] = r.vacuous;
  j["exact"] = r.exact;
  json els = json::array();
  for (const auto& e : r.elements) els.push_back(to_json(e));
  j["elements"] = std::move(els);
  return j;
}

std::string word_text(const FiniteMonoid& m, const FactorWord& w) {
  if (w.letters.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < w.letters.size(); ++i) s += (i ? ", " : "") + m.label(w.letters[i]);
  return s + ")";
}

std::string set_text(const FiniteMonoid& m, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Index x) {
    out += (first ? "" : ", ") + m.label(x);
    first = false;
  });
  return out + "}";
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string condensation_dot(const Premonoid& p) {
  const PreorderRel& r = p.rel;
  const Index n = p.size();
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x)
    if (r.class_of(x) == x) reps.push_back(x);
  std::ostringstream os;
  os << "digraph condensation {\n  rankdir=BT;\n";
  for (Index c : reps) {
    std::string label;
    for (Index y = 0; y < n; ++y)
      if (r.class_of(y) == c) label += (label.empty() ? "" : " ") + p.monoid.label(y);
    os << "  n" << c << " [label=" << quoted(label) << "];\n";
  }
  // Hasse edges: a < b with nothing strictly in between.
  for (Index a : reps)
    for (Index b : reps) {
      if (!r.lt(a, b)) continue;
      bool cover = true;
      for (Index c : reps)
        if (r.lt(a, c) && r.lt(c, b)) {
          cover = false;
          break;
        }
      if (cover) os << "  n" << a << " -> n" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string layer_automaton_dot(const FiniteMonoid& m, const LayerSequence& seq) {
  std::ostringstream os;
  os << "digraph layers {\n  rankdir=LR;\n";
  for (std::size_t k = 0; k < seq.layers.size(); ++k)
    os << "  s" << k + 1 << " [label=" << quoted("S" + std::to_string(k + 1) + " = " + set_text(m, seq.layers[k]))
       << "];\n";
  for (std::size_t k = 1; k < seq.layers.size(); ++k) os << "  s" << k << " -> s" << k + 1 << ";\n";
  os << "  s" << seq.layers.size() << " -> s" << seq.start << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace premon
