#include "premon/classification.hpp"

#include "premon/parallel.hpp"

namespace premon {

namespace {

constexpr std::array<std::string_view, kPropertyCount> kNames = {
    "factorable",       "BF",               "FF",               "HF",
    "UF",               "BmF",              "FmF",              "HmF",
    "UmF",              "atomic",           "BF-atomic",        "FF-atomic",
    "HF-atomic",        "UF-atomic",        "BmF-atomic",       "FmF-atomic",
    "HmF-atomic",       "UmF-atomic",       "BmF-atomic-paper", "FmF-atomic-paper",
    "HmF-atomic-paper", "UmF-atomic-paper",
};

std::size_t idx(Property p) { return static_cast<std::size_t>(p); }

std::string count_text(const std::optional<std::size_t>& n) { return n ? std::to_string(*n) : "infinitely many"; }

// Counts class vectors. Finitely many lengths means every factorization is
// at most max L long, so enumerating up to there is exhaustive.
std::optional<std::size_t> count_vectors(const FactorizationEngine& e, Index x, Alphabet a, const LengthSet& ls,
                                         bool& exact) {
  if (ls.empty()) return 0;
  if (!ls.is_finite()) return std::nullopt;
  auto v = e.class_vectors(x, a, *ls.max());
  if (!v) {
    exact = false;
    return std::nullopt;
  }
  return v->size();
}

void fill_minimal(PropertyRow& h, const MinimalResult& r, Property b, Property f, Property hm, Property u) {
  const bool some = !r.classes.empty();
  h[idx(b)] = some;
  h[idx(f)] = some;
  h[idx(hm)] = some && r.lengths().singleton();
  h[idx(u)] = r.classes.size() == 1;
}

std::string reason_for(const ElementProfile& e, const std::string& label, Property p) {
  const std::string at = "x = " + label + ": ";
  switch (p) {
    case Property::factorable:
    case Property::bf:
    case Property::hf: return at + "L(x) = " + e.lengths.to_string();
    case Property::atomic:
    case Property::bf_atomic:
    case Property::hf_atomic: return at + "atomic L(x) = " + e.atomic_lengths.to_string();
    case Property::ff:
    case Property::uf: return at + count_text(e.vectors) + " factorization classes";
    case Property::ff_atomic:
    case Property::uf_atomic: return at + count_text(e.atomic_vectors) + " atomic factorization classes";
    case Property::bmf:
    case Property::fmf:
    case Property::hmf:
    case Property::umf:
      return at + std::to_string(e.minimal.classes.size()) + " minimal classes, lengths " +
             e.minimal.lengths().to_string();
    case Property::bmf_atomic:
    case Property::fmf_atomic:
    case Property::hmf_atomic:
    case Property::umf_atomic:
      return at + std::to_string(e.minimal_within.classes.size()) + " minimal atomic classes, lengths " +
             e.minimal_within.lengths().to_string();
    default:
      return at + std::to_string(e.minimal_paper.classes.size()) + " minimal classes made of atoms, lengths " +
             e.minimal_paper.lengths().to_string();
  }
}

}  // namespace

std::string_view property_name(Property p) { return kNames[idx(p)]; }

std::optional<Property> property_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kPropertyCount; ++i)
    if (kNames[i] == name) return static_cast<Property>(i);
  return std::nullopt;
}

ElementProfile profile_element(const FactorizationEngine& engine, Index x) {
  ElementProfile e;
  e.x = x;
  e.lengths = engine.length_set(x, Alphabet::irreducibles);
  e.atomic_lengths = engine.length_set(x, Alphabet::atoms);
  e.vectors = count_vectors(engine, x, Alphabet::irreducibles, e.lengths, e.exact);
  e.atomic_vectors = count_vectors(engine, x, Alphabet::atoms, e.atomic_lengths, e.exact);
  e.minimal = engine.minimal(x, AtomicMode::none);
  e.minimal_within = engine.minimal(x, AtomicMode::within_atomic);
  e.minimal_paper = engine.minimal(x, AtomicMode::paper_literal);
  e.exact = e.exact && e.minimal.certified && e.minimal_within.certified;

  PropertyRow& h = e.holds;
  auto fill_lengths = [&](const LengthSet& ls, const std::optional<std::size_t>& vecs, Property fac, Property bf,
                          Property ff, Property hf, Property uf) {
    h[idx(fac)] = !ls.empty();
    h[idx(bf)] = !ls.empty() && ls.is_finite();
    h[idx(ff)] = !ls.empty() && vecs.has_value();
    h[idx(hf)] = ls.singleton();
    h[idx(uf)] = vecs == std::optional<std::size_t>{1};
  };
  fill_lengths(e.lengths, e.vectors, Property::factorable, Property::bf, Property::ff, Property::hf, Property::uf);
  fill_lengths(e.atomic_lengths, e.atomic_vectors, Property::atomic, Property::bf_atomic, Property::ff_atomic,
               Property::hf_atomic, Property::uf_atomic);
  fill_minimal(h, e.minimal, Property::bmf, Property::fmf, Property::hmf, Property::umf);
  fill_minimal(h, e.minimal_within, Property::bmf_atomic, Property::fmf_atomic, Property::hmf_atomic,
               Property::umf_atomic);
  fill_minimal(h, e.minimal_paper, Property::bmf_atomic_paper, Property::fmf_atomic_paper,
               Property::hmf_atomic_paper, Property::umf_atomic_paper);
  return e;
}

ClassificationReport classify(const FactorizationEngine& engine, const ClassifyOptions& opts) {
  ClassificationReport r;
  std::vector<Index> targets = opts.only.empty() ? engine.non_units().members() : opts.only;
  r.vacuous = targets.empty();
  r.elements.resize(targets.size());
  parallel_for(targets.size(), opts.threads,
               [&](std::size_t i) { r.elements[i] = profile_element(engine, targets[i]); });
  for (const auto& e : r.elements) {
    r.exact = r.exact && e.exact;
    for (std::size_t p = 0; p < kPropertyCount; ++p) {
      Verdict& v = r.verdicts[p];
      if (e.holds[p] || !v.holds) continue;
      v.holds = false;
      v.witness = e.x;
      v.reason = reason_for(e, engine.premonoid().monoid.label(e.x), static_cast<Property>(p));
    }
  }
  return r;
}

const std::vector<std::pair<Property, Property>>& diagram_arrows() {
  static const std::vector<std::pair<Property, Property>> arrows = [] {
    using P = Property;
    std::vector<std::pair<P, P>> out;
    auto side = [&](P fac, P bf, P ff, P hf, P uf, P bmf, P fmf, P hmf, P umf) {
      out.insert(out.end(), {{uf, ff}, {uf, hf}, {uf, umf}, {ff, fmf}, {ff, bf}, {hf, hmf}, {hf, bf},
                             {bf, bmf}, {umf, fmf}, {umf, hmf}, {fmf, bmf}, {hmf, bmf}, {bmf, fac}});
    };
    side(P::factorable, P::bf, P::ff, P::hf, P::uf, P::bmf, P::fmf, P::hmf, P::umf);
    side(P::atomic, P::bf_atomic, P::ff_atomic, P::hf_atomic, P::uf_atomic, P::bmf_atomic, P::fmf_atomic,
         P::hmf_atomic, P::umf_atomic);
    out.emplace_back(P::atomic, P::factorable);
    return out;
  }();
  return arrows;
}

std::vector<DiagramViolation> diagram_violations(const ClassificationReport& r) {
  std::vector<DiagramViolation> out;
  for (const auto& e : r.elements)
    for (auto [from, to] : diagram_arrows())
      if (e.holds[idx(from)] && !e.holds[idx(to)]) out.push_back({e.x, from, to});
  // The global verdicts must respect the arrows too.
  for (auto [from, to] : diagram_arrows())
    if (r[from].holds && !r[to].holds) out.push_back({kAbsent, from, to});
  return out;
}

}  // namespace premon
