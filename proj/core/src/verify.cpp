#include "premon/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "premon/irreducibles.hpp"
#include "premon/parallel.hpp"
#include "premon/rng.hpp"

namespace premon {

std::string to_string(Check::Status s) {
  switch (s) {
    case Check::Status::pass: return "pass";
    case Check::Status::fail: return "fail";
    case Check::Status::skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Check::Status::fail; });
}

const Check* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Check pass(std::string name, std::string detail = "") { return {std::move(name), Check::Status::pass, std::move(detail)}; }
Check fail(std::string name, std::string detail) { return {std::move(name), Check::Status::fail, std::move(detail)}; }
Check skip(std::string name, std::string why) { return {std::move(name), Check::Status::skipped, std::move(why)}; }

std::string at(const Premonoid& p, Index x) {
  return "x = " + p.monoid.label(x) + " (#" + std::to_string(x) + ")";
}

// Class vector re-expressed with the ambient premonoid's class names.
ClassVector to_parent(const ClassVector& v, const std::vector<Index>& map, const PreorderRel& parent) {
  std::vector<std::pair<Index, std::uint32_t>> e;
  for (auto [c, k] : v.entries) e.emplace_back(parent.class_of(map[c]), k);
  std::sort(e.begin(), e.end());
  ClassVector out;
  for (auto [c, k] : e) {
    if (!out.entries.empty() && out.entries.back().first == c) out.entries.back().second += k;
    else out.entries.emplace_back(c, k);
  }
  return out;
}

struct LocalView {
  std::vector<Index> irr, atoms;
  LengthSet lengths, atomic_lengths;
  std::vector<ClassVector> minimal, within, paper;
  std::vector<FactorWord> words, atomic_words;

  bool operator==(const LocalView&) const = default;
};

LocalView view_of(const Premonoid& p, const std::vector<Index>& map, const PreorderRel& parent, Index x,
                  std::size_t word_bound) {
  FactorizationEngine e(p);
  LocalView v;
  const IrreducibleDivisors d = irreducible_divisors(p, x);
  d.irreducibles.for_each([&](Index a) { v.irr.push_back(map[a]); });
  d.atoms.for_each([&](Index a) { v.atoms.push_back(map[a]); });
  v.lengths = e.length_set(x, Alphabet::irreducibles);
  v.atomic_lengths = e.length_set(x, Alphabet::atoms);
  auto vectors = [&](const MinimalResult& r) {
    std::vector<ClassVector> out;
    for (const auto& c : r.classes) out.push_back(to_parent(c.vector, map, parent));
    std::sort(out.begin(), out.end());
    return out;
  };
  v.minimal = vectors(e.minimal(x, AtomicMode::none));
  v.within = vectors(e.minimal(x, AtomicMode::within_atomic));
  v.paper = vectors(e.minimal(x, AtomicMode::paper_literal));
  auto words = [&](Alphabet a) {
    std::vector<FactorWord> out;
    for (auto& w : e.factorizations(x, word_bound, a)) {
      for (auto& l : w.letters) l = map[l];
      out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  v.words = words(Alphabet::irreducibles);
  v.atomic_words = words(Alphabet::atoms);
  return v;
}

std::string describe_difference(const LocalView& a, const LocalView& b) {
  if (a.irr != b.irr) return "irreducible divisors differ";
  if (a.atoms != b.atoms) return "atom divisors differ";
  if (a.lengths != b.lengths) return "length sets differ: " + a.lengths.to_string() + " vs " + b.lengths.to_string();
  if (a.atomic_lengths != b.atomic_lengths) return "atomic length sets differ";
  if (a.minimal != b.minimal) return "minimal classes differ";
  if (a.within != b.within) return "minimal atomic classes differ";
  if (a.paper != b.paper) return "minimal classes made of atoms differ";
  if (a.words != b.words) return "factorization sets differ";
  return "atomic factorization sets differ";
}

std::uint64_t saturating_pow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > (UINT64_MAX / b)) return UINT64_MAX;
    r *= b;
  }
  return r;
}

std::string bits(const Bitset& b) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  b.for_each([&](Index x) {
    os << (first ? "" : ",") << x;
    first = false;
  });
  os << '}';
  return os.str();
}

Bitset semigroup_closure(const FiniteMonoid& m, Bitset s) {
  for (bool grew = true; grew;) {
    grew = false;
    const auto mem = s.members();
    for (Index a : mem)
      for (Index b : mem) {
        const Index c = m.mul(a, b);
        if (c != kAbsent && !s.test(c)) {
          s.set(c);
          grew = true;
        }
      }
  }
  return s;
}

bool is_divisibility(const Premonoid& p) { return p.rel == divisibility_preorder(p.monoid); }

}  // namespace

std::vector<ClassVector> brute_force_minimal_vectors(const Premonoid& p, const Bitset& letters, Index x,
                                                     std::size_t max_len, std::size_t* longest) {
  const std::vector<Index> ls = letters.members();
  std::set<ClassVector> found;
  FactorWord w;
  auto rec = [&](auto&& self, Index prod) -> void {
    if (!w.letters.empty() && prod == x) found.insert(class_vector(p.rel, w));
    if (w.letters.size() == max_len) return;
    for (Index a : ls) {
      const Index q = p.monoid.mul(prod, a);
      if (q == kAbsent) continue;
      w.letters.push_back(a);
      self(self, q);
      w.letters.pop_back();
    }
  };
  rec(rec, p.monoid.identity());
  std::vector<ClassVector> minimal;
  for (const auto& v : found) {
    bool dominated = false;
    for (const auto& o : found)
      if (o != v && o.is_subset_of(v)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(v);
  }
  if (longest) {
    *longest = 0;
    for (const auto& v : minimal) *longest = std::max<std::size_t>(*longest, v.total());
  }
  return minimal;
}

Check check_localization(const Premonoid& p, Index x) {
  const std::string name = "localization";
  const Index n = p.size();
  std::vector<Index> id(n);
  std::iota(id.begin(), id.end(), Index{0});
  const std::size_t letters = irreducibles(p, 2).count();
  const std::size_t bound = letters <= 8 ? 4 : letters <= 20 ? 3 : 2;
  const LocalView here = view_of(p, id, p.rel, x, bound);
  const std::pair<const char*, SubmonoidMask> subs[] = {
      {"divisor-closed closure", divisor_closed_closure(p.monoid, x)},
      {"germ", germ_submonoid(p.monoid, x)},
  };
  for (const auto& [what, mask] : subs) {
    const SubPremonoid k = subpremonoid(p, mask);
    const LocalView there = view_of(k.premonoid, k.to_parent, p.rel, k.from_parent[x], bound);
    if (!(here == there)) return fail(name, at(p, x) + ", " + what + ": " + describe_difference(here, there));
  }
  // On the divisor-closed closure K, irreducibles and atoms of K are K's
  // share of those of H.
  const SubmonoidMask mask = divisor_closed_closure(p.monoid, x);
  const SubPremonoid k = subpremonoid(p, mask);
  Bitset irr_h = irreducibles(p, 2), at_h = atoms(p, 2);
  irr_h &= mask;
  at_h &= mask;
  Bitset irr_k(n), at_k(n);
  irreducibles(k.premonoid, 2).for_each([&](Index a) { irr_k.set(k.to_parent[a]); });
  atoms(k.premonoid, 2).for_each([&](Index a) { at_k.set(k.to_parent[a]); });
  if (!(irr_h == irr_k) || !(at_h == at_k))
    return fail(name, at(p, x) + ": irreducibles of the divisor-closed closure are not its share of those of H");
  return pass(name);
}

Check check_height_bound(const FactorizationEngine& e, unsigned s, bool heights_exact) {
  const std::string name = "height bound s=" + std::to_string(s);
  if (!heights_exact) return skip(name, "heights are not computable inside this window");
  const Premonoid& p = e.premonoid();
  const HeightTable ht = heights(p);
  const Bitset irr = irreducibles(p, s);
  std::string bad;
  e.non_units().for_each([&](Index x) {
    if (!bad.empty()) return;
    const std::uint64_t cap = saturating_pow(s, ht[x] - 1);
    const auto w = e.shortest(x, irr);
    if (!w) bad = at(p, x) + ": no factorization into degree-" + std::to_string(s) + " irreducibles";
    else if (w->length() > cap)
      bad = at(p, x) + ": shortest factorization has " + std::to_string(w->length()) + " letters, bound " +
            std::to_string(cap);
  });
  return bad.empty() ? pass(name) : fail(name, bad);
}

Check check_minimal_brute_force(const FactorizationEngine& e) {
  const std::string name = "minimal classes vs brute force";
  const Premonoid& p = e.premonoid();
  const std::size_t n = p.size();
  std::string bad;
  const Bitset alphabets[] = {e.letters(Alphabet::irreducibles), e.letters(Alphabet::atoms)};
  const AtomicMode modes[] = {AtomicMode::none, AtomicMode::within_atomic};
  for (int k = 0; k < 2 && bad.empty(); ++k) {
    const double work = std::pow(static_cast<double>(alphabets[k].count()), static_cast<double>(n + 2));
    if (work > 2e7) return skip(name, "brute force too large");
    e.non_units().for_each([&](Index x) {
      if (!bad.empty()) return;
      std::size_t longest = 0;
      auto brute = brute_force_minimal_vectors(p, alphabets[k], x, n + 2, &longest);
      std::sort(brute.begin(), brute.end());
      std::vector<ClassVector> fast;
      for (const auto& c : e.minimal(x, modes[k]).classes) fast.push_back(c.vector);
      std::sort(fast.begin(), fast.end());
      if (longest > n - 1) bad = at(p, x) + ": a minimal factorization has " + std::to_string(longest) + " letters";
      else if (brute != fast)
        bad = at(p, x) + ": certified search found " + std::to_string(fast.size()) + " classes, brute force " +
              std::to_string(brute.size()) + (k ? " (atoms)" : "");
    });
  }
  return bad.empty() ? pass(name) : fail(name, bad);
}

Check check_duo_inclusion(const FiniteMonoid& m, std::uint64_t seed) {
  const std::string name = "left duo inclusion";
  if (!m.complete()) return skip(name, "partial table");
  if (!structure_flags(m).left_duo) return skip(name, "not left duo");
  const Index n = m.size();
  auto test = [&](const std::vector<Index>& xs) -> std::string {
    auto f = duo_inclusion_failure(m, xs);
    if (f.empty()) return "";
    std::ostringstream os;
    os << "tuple (";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << "), selection (";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ")";
    return os.str();
  };
  // Every tuple up to a length the carrier size allows, then random tuples
  // of length 4.
  std::vector<Index> xs;
  std::string bad;
  auto rec = [&](auto&& self, std::size_t len) -> void {
    if (!bad.empty()) return;
    if (!xs.empty()) bad = test(xs);
    if (xs.size() == len || !bad.empty()) return;
    for (Index x = 0; x < n && bad.empty(); ++x) {
      xs.push_back(x);
      self(self, len);
      xs.pop_back();
    }
  };
  rec(rec, n <= 6 ? 4 : n <= 10 ? 3 : 2);
  Rng rng(seed);
  for (int t = 0; t < 200 && bad.empty(); ++t) {
    std::vector<Index> four(4);
    for (auto& v : four) v = static_cast<Index>(rng.below(n));
    bad = test(four);
  }
  return bad.empty() ? pass(name) : fail(name, bad);
}

VerifyReport verify_suite(const Premonoid& p, const VerifyOptions& opts) {
  VerifyReport rep;
  auto& out = rep.checks;
  const FiniteMonoid& m = p.monoid;
  const Index n = p.size();
  const FactorizationEngine engine(p);
  const Bitset nu = engine.non_units();
  const ClassificationReport cls = classify(engine, {opts.threads, {}});
  const PremonoidFlags pf = premonoid_flags(p);
  const StructureFlags sf = structure_flags(m);
  const bool divisibility = is_divisibility(p);
  const std::string window_note = opts.window ? "hypotheses evaluated on the window" : "";
  Rng rng(opts.seed);

  // Localization: every non-unit, in parallel.
  {
    const std::vector<Index> xs = nu.members();
    std::vector<Check> per(xs.size());
    parallel_for(xs.size(), opts.threads, [&](std::size_t i) { per[i] = check_localization(p, xs[i]); });
    Check c = pass("localization", std::to_string(xs.size()) + " elements");
    for (const auto& r : per)
      if (r.status == Check::Status::fail) {
        c = r;
        break;
      }
    out.push_back(c);
  }

  out.push_back(check_height_bound(engine, 2, opts.heights_exact));
  out.push_back(check_height_bound(engine, 3, opts.heights_exact));

  // Loftness of finite premonoids: BF iff FF and BmF iff FmF, per element.
  {
    std::string bad;
    for (const auto& e : cls.elements) {
      if (e.holds[static_cast<std::size_t>(Property::bf)] != e.holds[static_cast<std::size_t>(Property::ff)])
        bad = at(p, e.x) + ": BF and FF verdicts differ";
      else if (e.holds[static_cast<std::size_t>(Property::bmf)] != e.holds[static_cast<std::size_t>(Property::fmf)])
        bad = at(p, e.x) + ": BmF and FmF verdicts differ";
      if (!bad.empty()) break;
    }
    out.push_back(bad.empty() ? pass("BF iff FF") : fail("BF iff FF", bad));
  }

  {
    std::string bad;
    for (const auto& e : cls.elements)
      if (!e.minimal.certified || !e.minimal_within.certified) {
        bad = at(p, e.x) + ": minimal search exhausted its budget";
        break;
      }
    out.push_back(bad.empty() ? pass("finitely many minimal classes") : fail("finitely many minimal classes", bad));
  }

  {
    const auto v = diagram_violations(cls);
    if (v.empty()) {
      out.push_back(pass("implication diagram"));
    } else {
      std::string d = std::string(property_name(v[0].from)) + " without " + std::string(property_name(v[0].to));
      out.push_back(fail("implication diagram", (v[0].x == kAbsent ? "global verdicts" : at(p, v[0].x)) + ": " + d));
    }
  }

  // Flag implications.
  {
    std::string bad;
    if (pf.strongly_positive && !pf.positive) bad = "strongly positive but not positive";
    else if (pf.positive && !pf.preordered) bad = "positive but not preordered";
    else if (pf.strongly_positive && !pf.weakly_positive) bad = "strongly positive but not weakly positive";
    else if (pf.positive && !pf.weakly_positive) bad = "positive but not weakly positive";
    else if (pf.strongly_preordered && !pf.preordered) bad = "strongly preordered but not preordered";
    else if (sf.acyclic && !sf.unit_cancellative) bad = "acyclic but not unit-cancellative";
    else if (sf.unit_cancellative && !sf.dedekind_finite) bad = "unit-cancellative but not Dedekind-finite";
    else if (sf.duo != (sf.left_duo && sf.right_duo)) bad = "duo flag inconsistent";
    else if (sf.left_duo && !sf.dedekind_finite) bad = "left duo but not Dedekind-finite";
    else if (m.complete() && !sf.dedekind_finite) bad = "finite monoid that is not Dedekind-finite";
    out.push_back(bad.empty() ? pass("flag implications") : fail("flag implications", bad));
  }

  // Irreducible bookkeeping.
  {
    const IrreducibleReport ir = irreducible_report(p, {2, 3, 4});
    std::string bad;
    for (unsigned s : {2U, 3U, 4U})
      if (!ir.atoms.at(s).is_subset_of(ir.irreducibles.at(s))) bad = "atoms not within irreducibles at degree " + std::to_string(s);
    if (bad.empty() && !ir.quarks.is_subset_of(ir.irreducibles.at(2))) bad = "quarks not within irreducibles";
    for (unsigned s : {2U, 3U})
      if (bad.empty() && (!ir.irreducibles.at(s + 1).is_subset_of(ir.irreducibles.at(s)) ||
                          !ir.atoms.at(s + 1).is_subset_of(ir.atoms.at(s))))
        bad = "degree " + std::to_string(s + 1) + " sets not within degree " + std::to_string(s);
    if (bad.empty() && pf.strongly_positive && !(ir.irreducibles.at(2) == ir.atoms.at(2)))
      bad = "strongly positive, yet irreducibles " + bits(ir.irreducibles.at(2)) + " != atoms " + bits(ir.atoms.at(2));
    if (bad.empty() && divisibility && sf.acyclic &&
        (!(ir.irreducibles.at(2) == ir.atoms.at(2)) || !(ir.quarks == ir.atoms.at(2))))
      bad = "acyclic, yet irreducibles, atoms and quarks differ";
    out.push_back(bad.empty() ? pass("irreducible invariants") : fail("irreducible invariants", bad));
  }

  // Structural implications on finite (hence loft, weakly l.f.g.u.) premonoids.
  auto implication = [&](const std::string& name, bool hyp, Property concl) {
    if (!hyp) {
      out.push_back(skip(name, "hypothesis not met"));
      return;
    }
    const Verdict& v = cls[concl];
    out.push_back(v.holds ? pass(name, window_note) : fail(name, v.reason));
  };
  const IrreducibleReport base = irreducible_report(p, {2});
  const bool irr_are_atoms = base.irreducibles.at(2) == base.atoms.at(2);
  implication("weakly positive => factorable", pf.weakly_positive, Property::factorable);
  implication("weakly positive, irreducibles are atoms => FmF-atomic", pf.weakly_positive && irr_are_atoms,
              Property::fmf_atomic);
  implication("strongly positive => FF-atomic", pf.strongly_positive, Property::ff_atomic);
  implication("Dedekind-finite => factorable", divisibility && sf.dedekind_finite, Property::factorable);
  implication("acyclic => FmF-atomic", divisibility && sf.acyclic, Property::fmf_atomic);
  implication("commutative, unit-cancellative => FF-atomic", divisibility && sf.commutative && sf.unit_cancellative,
              Property::ff_atomic);
  implication("left duo => factorable", divisibility && sf.left_duo, Property::factorable);

  // Dedekind-finite and BF-factorable force acyclicity (divisibility only).
  if (divisibility && sf.dedekind_finite && cls[Property::bf].holds && !cls.vacuous && m.complete())
    out.push_back(sf.acyclic ? pass("Dedekind-finite BF => acyclic")
                             : fail("Dedekind-finite BF => acyclic", "BF-factorable but not acyclic"));
  else
    out.push_back(skip("Dedekind-finite BF => acyclic", "hypothesis not met"));

  out.push_back(check_duo_inclusion(m, opts.seed));

  if (n <= opts.brute_force_max) out.push_back(check_minimal_brute_force(engine));
  else out.push_back(skip("minimal classes vs brute force", "carrier larger than " + std::to_string(opts.brute_force_max)));

  // Unit removal on random Q with Q*Q inside Q.
  if (m.complete()) {
    std::string bad;
    for (int t = 0; t < 30 && bad.empty(); ++t) {
      Bitset q(n), a(n);
      for (Index x = 0; x < n; ++x) {
        if (rng.chance(1, 3)) q.set(x);
        if (rng.chance(1, 2)) a.set(x);
      }
      q = semigroup_closure(m, q);
      if (!unit_removal_holds(m, q, a)) bad = "Q = " + bits(q) + ", A = " + bits(a);
    }
    out.push_back(bad.empty() ? pass("unit removal") : fail("unit removal", bad));
  } else {
    out.push_back(skip("unit removal", "partial table"));
  }

  // Generating set of irreducibles up to units.
  if (pf.weakly_positive) {
    try {
      const GeneratingSet g = irreducible_generating_set(p);
      std::string bad;
      nu.for_each([&](Index x) {
        if (bad.empty() && pi(m, g.witness[x]) != x) bad = at(p, x) + ": witness does not multiply to x";
      });
      out.push_back(bad.empty() ? pass("irreducible generating set", std::to_string(g.reps.size()) + " orbit representatives")
                                : fail("irreducible generating set", bad));
    } catch (const NotFactorable& e) {
      out.push_back(fail("irreducible generating set", e.what()));
    }
  } else {
    out.push_back(skip("irreducible generating set", "not weakly positive"));
  }

  // Length preorder from a generating set: irreducibles = quarks = A.
  {
    std::vector<Index> a;
    for (Index x = 0; x < n; ++x)
      if (x != m.identity() && rng.chance(1, 2)) a.push_back(x);
    const PhiPreorder ph = phi_preorder(m, a);
    const Premonoid q(m, ph.rel);
    const Bitset want = Bitset::from_members(n, a);
    const Bitset irr = irreducibles(q, 2), qk = quarks(q);
    std::string bad;
    for (Index x = 0; x < n && bad.empty(); ++x)
      if (ph.phi[x] >= 1 && !preorder_non_units(q).test(x)) bad = at(p, x) + " has positive length but is a unit";
    if (bad.empty() && !(irr == want)) bad = "A = " + bits(want) + ", irreducibles " + bits(irr);
    if (bad.empty() && !(qk == want)) bad = "A = " + bits(want) + ", quarks " + bits(qk);
    out.push_back(bad.empty() ? pass("length preorder round trip") : fail("length preorder round trip", bad));
  }

  // Transport along a random relabeling.
  {
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    for (Index i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    const Premonoid r = relabel(p, perm);
    auto image = [&](const Bitset& b) {
      Bitset o(n);
      b.for_each([&](Index x) { o.set(perm[x]); });
      return o;
    };
    const bool ok = image(irreducibles(p, 2)) == irreducibles(r, 2) && image(atoms(p, 2)) == atoms(r, 2) &&
                    image(quarks(p)) == quarks(r);
    out.push_back(ok ? pass("isomorphism transport") : fail("isomorphism transport", "irreducible sets do not follow the relabeling"));
  }

  // Units of a subpremonoid are the ambient units it contains.
  {
    std::vector<Index> gens;
    for (Index x = 0; x < n; ++x)
      if (rng.chance(1, 3)) gens.push_back(x);
    const SubmonoidMask k = generated_submonoid(m, gens);
    const SubPremonoid sp = subpremonoid(p, k);
    Bitset ku(n);
    preorder_units(sp.premonoid).for_each([&](Index u) { ku.set(sp.to_parent[u]); });
    Bitset want = preorder_units(p);
    want &= k;
    out.push_back(ku == want ? pass("restricted units") : fail("restricted units", "K = " + bits(k)));
  }
  return rep;
}

}  // namespace premon
