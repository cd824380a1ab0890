// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "premon/classification.hpp"
#include "premon/families.hpp"
#include "premon/higman.hpp"
#include "premon/irreducibles.hpp"
#include "premon/presentation.hpp"
#include "premon/random_instances.hpp"
#include "premon/snf.hpp"
#include "premon/verify.hpp"

using namespace premon;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string d) { return {false, std::move(d)}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << " s";
  return os.str();
}

// The instance pool shared by several criteria: 100 seeded random premonoids
// on at most six elements, then every built-in example.
struct Pooled {
  std::string name;
  Premonoid premonoid;
  bool window = false;
  bool heights_exact = true;
};

const std::vector<Pooled>& pool() {
  static const std::vector<Pooled> p = [] {
    std::vector<Pooled> out;
    Rng rng(2025);
    for (int i = 0; i < 100; ++i) {
      RandomPremonoid r = random_premonoid(rng, 6);
      out.push_back({"random #" + std::to_string(i) + " (" + r.description + ")", std::move(r.premonoid)});
    }
    for (const auto& s : builtin_specs()) {
      Instance inst = load_instance(s);
      out.push_back({s, std::move(inst.premonoid), inst.is_window(), inst.heights_exact});
    }
    return out;
  }();
  return p;
}

Index power(Index b, Index e) {
  Index r = 1;
  for (Index i = 0; i < e; ++i) r *= b;
  return r;
}

// ------------------------------------------------------------ criteria

Outcome zpn_suite() {
  std::string times;
  for (Index p : {2U, 3U})
    for (Index n : {2U, 3U}) {
      const auto t0 = std::chrono::steady_clock::now();
      const Index q = power(p, n);
      const std::string tag = "Z/" + std::to_string(q);
      const Premonoid h = with_divisibility(make_zn(q));
      const FiniteMonoid& m = h.monoid;
      const Bitset u = units(m);
      if (u.count() != power(p, n - 1) * (p - 1)) return fail(tag + ": unit count " + std::to_string(u.count()));
      Bitset pu(q);
      u.for_each([&](Index x) { pu.set(m.mul(p, x)); });
      const FactorizationEngine e(h);
      if (!(e.letters(Alphabet::atoms) == pu)) return fail(tag + ": atoms differ from p times the units");
      const LengthSet l = e.length_set(0);
      if (!(l == LengthSet::periodic({}, n, 1, {0}))) return fail(tag + ": L(0) = " + l.to_string());
      const MinimalResult r = e.minimal(0);
      if (!r.certified || r.classes.size() != 1 || r.classes[0].vector.total() != n)
        return fail(tag + ": minimal classes of 0 are not a single class of length n");
      const ClassificationReport c = classify(e);
      if (!c[Property::umf_atomic].holds || c[Property::bf_atomic].holds) return fail(tag + ": classification");
      const double s = seconds_since(t0);
      if (s >= 1.0) return fail(tag + ": took " + fixed(s));
      times += (times.empty() ? "" : ", ") + tag + " " + fixed(s);
    }
  return {true, times};
}

Outcome shuffle_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(4242);
  std::size_t agree = 0, below = 0;
  for (int t = 0; t < 10000; ++t) {
    const Index n = static_cast<Index>(rng.between(1, 6));
    const PreorderRel rel = random_preorder(rng, random_monoid(rng, n));
    auto word = [&] {
      std::vector<Index> w(static_cast<std::size_t>(rng.between(0, 7)));
      for (auto& a : w) a = static_cast<Index>(rng.below(rel.size()));
      return w;
    };
    const auto u = word(), v = word();
    const bool slow = oracle::shuffle_leq_literal(rel, u, v);
    agree += shuffle_leq(rel, FactorWord{u}, FactorWord{v}) == slow;
    below += slow;
  }
  const double s = seconds_since(t0);
  if (agree != 10000) return fail(std::to_string(10000 - agree) + " disagreements");
  if (s >= 5.0) return fail("took " + fixed(s));
  return {true, "10000/10000 agree (" + std::to_string(below) + " related pairs), " + fixed(s)};
}

Outcome diagram_fuzz() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0;
  for (const auto& p : pool()) {
    const ClassificationReport r = classify(FactorizationEngine(p.premonoid));
    const auto v = diagram_violations(r);
    if (!v.empty())
      return fail(p.name + ": " + std::string(property_name(v[0].from)) + " without " + std::string(property_name(v[0].to)));
    ++count;
  }
  const double s = seconds_since(t0);
  if (s >= 60.0) return fail("took " + fixed(s));
  return {true, std::to_string(count) + " instances, 0 violations, " + fixed(s)};
}

Outcome height_bound() {
  std::size_t checked = 0, skipped = 0;
  for (const auto& p : pool()) {
    const FactorizationEngine e(p.premonoid);
    for (unsigned s : {2U, 3U}) {
      const Check c = check_height_bound(e, s, p.heights_exact);
      if (c.status == Check::Status::fail) return fail(p.name + ": " + c.detail);
      c.status == Check::Status::skipped ? ++skipped : ++checked;
    }
  }
  std::string d = std::to_string(checked) + " (instance, s) pairs, 0 failures";
  if (skipped) d += ", " + std::to_string(skipped) + " skipped (inexact heights)";
  return {skipped == 0, d};
}

Outcome localization() {
  Rng rng(5150);
  const auto& ps = pool();
  for (int t = 0; t < 50; ++t) {
    const auto& p = ps[rng.below(ps.size())];
    const Index x = static_cast<Index>(rng.below(p.premonoid.size()));
    const Check c = check_localization(p.premonoid, x);
    if (c.status != Check::Status::pass) return fail(p.name + ": " + c.detail);
  }
  return {true, "50 (instance, x) pairs, 0 discrepancies"};
}

Outcome minimal_certification() {
  std::size_t checked = 0, skipped = 0;
  for (const auto& p : pool()) {
    if (p.premonoid.size() > 6) continue;
    const Check c = check_minimal_brute_force(FactorizationEngine(p.premonoid));
    if (c.status == Check::Status::fail) return fail(p.name + ": " + c.detail);
    c.status == Check::Status::skipped ? ++skipped : ++checked;
  }
  std::string d = std::to_string(checked) + " instances with |H| <= 6 certified";
  if (skipped) d += ", " + std::to_string(skipped) + " too large for brute force";
  return {skipped == 0, d};
}

Outcome bf_iff_ff() {
  std::size_t count = 0;
  for (const auto& p : pool()) {
    const ClassificationReport r = classify(FactorizationEngine(p.premonoid));
    if (r[Property::bf].holds != r[Property::ff].holds) return fail(p.name + ": global BF and FF differ");
    for (const auto& e : r.elements)
      if (e.holds[static_cast<std::size_t>(Property::bf)] != e.holds[static_cast<std::size_t>(Property::ff)])
        return fail(p.name + ": BF and FF differ at " + std::to_string(e.x));
    ++count;
  }
  return {true, std::to_string(count) + " instances agree"};
}

Outcome duo_lemma() {
  Rng rng(6060);
  std::size_t tuples = 0;
  for (int t = 0; t < 25; ++t) {
    const FiniteMonoid m = random_left_duo_monoid(rng, 6);
    if (!structure_flags(m).left_duo) return fail("generator returned a monoid that is not left duo");
    const Index n = m.size();
    std::vector<Index> xs;
    std::function<std::string()> rec = [&]() -> std::string {
      if (!xs.empty()) {
        ++tuples;
        if (!duo_inclusion_failure(m, xs).empty()) {
          std::string s = "tuple";
          for (Index x : xs) s += " " + std::to_string(x);
          return s;
        }
      }
      if (xs.size() == 4) return "";
      for (Index x = 0; x < n; ++x) {
        xs.push_back(x);
        if (auto r = rec(); !r.empty()) return r;
        xs.pop_back();
      }
      return "";
    };
    if (auto bad = rec(); !bad.empty()) return fail("monoid #" + std::to_string(t) + ": " + bad);
  }
  return {true, "25 left duo monoids, " + std::to_string(tuples) + " tuples with n <= 4, every selection"};
}

Outcome smith() {
  Rng rng(9090);
  int done = 0;
  while (done < 100) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 4));
    IntMatrix a(n, std::vector<std::int64_t>(n));
    for (auto& row : a)
      for (auto& v : row) v = rng.between(-20, 20);
    if (determinant(a) == 0) continue;
    const SnfResult s = snf(a);
    if (multiply(multiply(s.u, a), s.v) != s.d) return fail("U A V != D");
    const auto du = determinant(s.u), dv = determinant(s.v);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) return fail("transform not unimodular");
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (d[i] <= 0 || d[i + 1] % d[i]) return fail("divisibility chain broken");
    ++done;
  }
  const IntMatrix a{{2, 0}, {0, 3}};
  if (snf(a).diagonal() != std::vector<std::int64_t>{1, 6}) return fail("diag(2,3) does not reduce to diag(1,6)");
  const MatrixLengths l = matrix_length_set(a);
  if (!(l.lengths == LengthSet::finite({prime_factors(6).size()})) || !(l.lengths == LengthSet::finite({2})))
    return fail("L(diag(2,3)) = " + l.lengths.to_string());
  return {true, "100 random matrices; diag(2,3) -> diag(1,6); L = {2} = {Omega(6)}"};
}

// Every monoid on {0, .., n-1} with identity 0, as raw tables.
std::vector<FiniteMonoid> all_small_monoids(Index n) {
  std::vector<FiniteMonoid> out;
  const std::size_t free_cells = static_cast<std::size_t>(n - 1) * (n - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < free_cells; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Index> t(static_cast<std::size_t>(n) * n);
    std::size_t c = code;
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        if (a == 0) t[b] = b;
        else if (b == 0) t[static_cast<std::size_t>(a) * n] = a;
        else {
          t[static_cast<std::size_t>(a) * n + b] = static_cast<Index>(c % n);
          c /= n;
        }
      }
    try {
      out.push_back(FiniteMonoid::load(n, 0, std::move(t)));
    } catch (const NonAssociative&) {
    }
  }
  return out;
}

Outcome power_monoids() {
  std::size_t bases = 0, elements = 0;
  for (Index n = 1; n <= 3; ++n)
    for (const FiniteMonoid& base : all_small_monoids(n)) {
      ++bases;
      const PowerMonoid pm(base);
      const Window w = build_window(pm, pm.default_roots());
      for (const auto& x : w.elements) {
        ++elements;
        if (pm.divisors(x).size() > (std::size_t{1} << (x.size() - 1)))
          return fail("base #" + std::to_string(bases) + ": " + pm.format(x) + " has too many divisors");
      }
      const Premonoid& p = w.premonoid;
      const ClassificationReport r = classify(FactorizationEngine(p));
      if (!r[Property::fmf].holds) return fail("base #" + std::to_string(bases) + ": not FmF-factorable");
      if (!(irreducibles(p, 2) == quarks(p))) return fail("base #" + std::to_string(bases) + ": irreducibles differ from quarks");
    }
  return {true, std::to_string(bases) + " base monoids of size <= 3, " + std::to_string(elements) + " elements"};
}

Outcome product_one_c3() {
  const Instance inst = load_instance("b:C3:g,g2");
  const Premonoid& p = inst.premonoid;
  std::set<std::string> got;
  for (Index a : oracle::atoms(p, 2)) got.insert(p.monoid.label(a));
  const std::set<std::string> want{"(g,g,g)", "(g2,g2,g2)", "(g,g2)"};
  if (got != want) return fail("brute-force atoms differ");
  std::set<std::string> lib;
  atoms(p, 2).for_each([&](Index a) { lib.insert(p.monoid.label(a)); });
  if (lib != want) return fail("library atoms differ");
  const FiniteMonoid& m = p.monoid;
  const StructureFlags f = structure_flags(m);
  if (!f.commutative) return fail("not commutative");
  if (!f.reduced) return fail("not reduced");
  const Index n = m.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        if (b == c) continue;
        const Index ab = m.mul(a, b), ac = m.mul(a, c);
        if (ab != kAbsent && ab == ac) return fail("not cancellative inside the window");
      }
  return {true, "atoms {(g,g,g), (g2,g2,g2), (g,g2)}; cancellative, commutative, reduced on " + std::to_string(n) + " elements"};
}

Outcome higman() {
  const auto seq = longest_bad_sequence(1, {0, 0, 0}, 3);
  if (seq.size() != 4) return fail("unary bad sequence from aaa has length " + std::to_string(seq.size()));
  Rng rng(1212);
  const PreorderRel eq = PreorderRel::discrete(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Word> ws(200);
    for (auto& w : ws) {
      w.resize(static_cast<std::size_t>(rng.between(0, 10)));
      for (auto& a : w) a = static_cast<Index>(rng.below(3));
    }
    const auto hit = erdos_rado_scan(ws, eq);
    if (!hit || !scattered_subword(ws[hit->i], ws[hit->j])) return fail("sequence #" + std::to_string(t) + " has no embedding pair");
  }
  return {true, "bad sequence aaa, aa, a, 1; 200 random sequences of 200 words all contain a pair"};
}

Outcome presentation() {
  const BoundedCongruence c(parse_presentation("xy", "x2=yx2y"), 10);
  if (!c.same_class({0, 0}, {1, 0, 0, 1})) return fail("x2 and yx2y stay apart");
  const PresentationEvidence ev = explore(c);
  const auto& ch = ev.non_shrinking_chain;
  if (ch.classes.size() < 3) return fail("no descending chain of length 3");
  std::string d;
  for (std::size_t i = 0; i < std::min<std::size_t>(ch.representatives.size(), 4); ++i)
    d += (d.empty() ? "" : " > ") + ch.representatives[i];
  return {true, "x2 ~ yx2y; chain of length " + std::to_string(ch.classes.size()) + " (" + d + " ...), " + ev.label};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Z/p^n units, atoms, lengths, minimal class, classification", zpn_suite},
      {"shuffling preorder fast path vs injective matching", shuffle_oracle},
      {"implication diagram on random and built-in premonoids", diagram_fuzz},
      {"factorization within s^(ht-1) irreducibles", height_bound},
      {"invariance under localization", localization},
      {"minimal-length certification vs brute force", minimal_certification},
      {"BF iff FF on finite carriers", bf_iff_ff},
      {"left duo inclusion", duo_lemma},
      {"Smith normal form", smith},
      {"power monoids over small bases", power_monoids},
      {"product-one sequences over C3", product_one_c3},
      {"Higman utilities", higman},
      {"presentation explorer", presentation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  " << criteria[i].first << " -- "
              << o.detail << '\n';
  }
  return failures ? 1 : 0;
}
