#include "premon/factorization.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "premon/irreducibles.hpp"

namespace premon {

const Bitset& LayerSequence::at(std::uint64_t k) const {
  if (k < start) return layers[k - 1];
  return layers[start - 1 + (k - start) % period];
}

LengthSet MinimalResult::lengths() const {
  std::vector<std::uint64_t> ls;
  for (const auto& c : classes) ls.push_back(c.vector.total());
  return LengthSet::finite(std::move(ls));
}

LayerSequence layer_sequence(const FiniteMonoid& m, const Bitset& letters, std::size_t max_layers) {
  LayerSequence seq;
  std::unordered_map<Bitset, std::size_t, BitsetHash> first_seen;
  Bitset cur = letters;
  for (std::size_t k = 1;; ++k) {
    if (auto it = first_seen.find(cur); it != first_seen.end()) {
      seq.start = it->second;
      seq.period = k - it->second;
      return seq;
    }
    if (k > max_layers) throw NotComputable("layer sequence exceeds " + std::to_string(max_layers) + " layers");
    first_seen.emplace(cur, k);
    seq.layers.push_back(cur);
    cur = set_product(m, cur, letters);
  }
}

// ---------------------------------------------------------------- streaming

std::optional<FactorWord> FactorizationStream::next() {
  while (len_ <= max_len_) {
    if (!open_) {
      open_ = true;
      stack_.clear();
      word_.clear();
      if (!reach_[len_].test(m_->identity())) {
        open_ = false;
        ++len_;
        continue;
      }
      stack_.push_back({m_->identity(), 0});
    }
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      const std::size_t depth = stack_.size() - 1;
      if (depth == len_) {
        FactorWord out{word_};
        stack_.pop_back();
        word_.pop_back();
        return out;
      }
      const std::size_t remaining = len_ - depth;
      bool pushed = false;
      while (f.next < letters_.size()) {
        const Index a = letters_[f.next++];
        const Index q = m_->mul(f.prod, a);
        if (q != kAbsent && reach_[remaining - 1].test(q)) {
          stack_.push_back({q, 0});
          word_.push_back(a);
          pushed = true;
          break;
        }
      }
      if (!pushed) {
        stack_.pop_back();
        if (!word_.empty()) word_.pop_back();
      }
    }
    open_ = false;
    ++len_;
  }
  return std::nullopt;
}

// ------------------------------------------------------------------- engine

FactorizationEngine::FactorizationEngine(Premonoid p, EngineLimits limits)
    : p_(std::move(p)), limits_(limits) {
  non_units_ = preorder_non_units(p_);
  irreducibles_ = irreducibles(p_, 2);
  atoms_ = atoms(p_, 2);
  irr_layers_ = layer_sequence(p_.monoid, irreducibles_, limits_.max_layers);
  atom_layers_ = layer_sequence(p_.monoid, atoms_, limits_.max_layers);
}

LengthSet FactorizationEngine::length_set(Index x, Alphabet a) const {
  const LayerSequence& seq = layers(a);
  std::vector<bool> prefix(seq.start, false);
  for (std::size_t k = 1; k < seq.start; ++k) prefix[k] = seq.at(k).test(x);
  std::vector<bool> cycle(seq.period);
  for (std::size_t i = 0; i < seq.period; ++i) cycle[i] = seq.at(seq.start + i).test(x);
  return LengthSet::from_pattern(prefix, seq.start, cycle);
}

FactorizationStream FactorizationEngine::enumerate(Index x, std::size_t max_len, Alphabet a) const {
  const FiniteMonoid& m = p_.monoid;
  FactorizationStream s;
  s.m_ = &p_.monoid;
  s.letters_ = letters(a).members();
  s.max_len_ = max_len;
  s.reach_.reserve(max_len + 1);
  Bitset b0(m.size());
  b0.set(x);
  s.reach_.push_back(b0);
  for (std::size_t r = 1; r <= max_len; ++r) {
    Bitset br(m.size());
    const Bitset& prev = s.reach_.back();
    for (Index y = 0; y < m.size(); ++y)
      for (Index l : s.letters_) {
        const Index q = m.mul(y, l);
        if (q != kAbsent && prev.test(q)) {
          br.set(y);
          break;
        }
      }
    s.reach_.push_back(std::move(br));
  }
  return s;
}

std::vector<FactorWord> FactorizationEngine::factorizations(Index x, std::size_t max_len, Alphabet a) const {
  std::vector<FactorWord> out;
  auto s = enumerate(x, max_len, a);
  while (auto w = s.next()) out.push_back(std::move(*w));
  return out;
}

namespace {

// Dense class numbering for a letter set: classes ordered by their smallest
// member, since that is what ClassVector uses as the class name.
struct DenseClasses {
  std::vector<Index> reps;        // class id -> representative
  std::vector<std::uint32_t> id;  // element -> class id (letters only)

  DenseClasses(const PreorderRel& rel, const std::vector<Index>& letters) : id(rel.size(), kAbsent) {
    std::map<Index, std::uint32_t> by_rep;
    for (Index a : letters) by_rep.emplace(rel.class_of(a), 0);
    std::uint32_t next = 0;
    for (auto& [rep, c] : by_rep) {
      c = next++;
      reps.push_back(rep);
    }
    for (Index a : letters) id[a] = by_rep.at(rel.class_of(a));
  }

  ClassVector to_vector(const std::uint16_t* v) const {
    ClassVector out;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (v[c]) out.entries.emplace_back(reps[c], v[c]);
    return out;
  }
};

bool dense_subset(const std::uint16_t* a, const std::uint16_t* b, std::size_t c) {
  for (std::size_t i = 0; i < c; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct StateStore {
  std::size_t width;
  std::vector<Index> prod, letter;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint16_t> vecs;

  explicit StateStore(std::size_t w) : width(w) {}
  std::size_t size() const { return prod.size(); }
  const std::uint16_t* vec(std::size_t s) const { return vecs.data() + s * width; }
  std::size_t add(Index p, Index l, std::uint32_t par, const std::uint16_t* v) {
    prod.push_back(p);
    letter.push_back(l);
    parent.push_back(par);
    vecs.insert(vecs.end(), v, v + width);
    return prod.size() - 1;
  }
  FactorWord word(std::size_t s) const {
    FactorWord w;
    while (parent[s] != std::uint32_t(-1)) {
      w.letters.push_back(letter[s]);
      s = parent[s];
    }
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  }
};

}  // namespace

MinimalResult FactorizationEngine::minimal(Index x, AtomicMode mode) const {
  switch (mode) {
    case AtomicMode::none: return minimal_over(x, irreducibles_);
    case AtomicMode::within_atomic: return minimal_over(x, atoms_);
    case AtomicMode::paper_literal: {
      MinimalResult all = minimal_over(x, irreducibles_);
      MinimalResult out;
      out.certified = all.certified;
      out.length_cap = all.length_cap;
      for (auto& c : all.classes)
        if (auto w = realize_with(x, c.vector, atoms_)) out.classes.push_back({c.vector, std::move(*w)});
      return out;
    }
  }
  return {};
}

// Breadth-first search over (prefix product, class vector). A state is
// dropped when another state with the same product carries a sub-multiset
// vector: any completion of the dropped one is beaten by the same completion
// of the survivor. Minimal factorizations have pairwise distinct prefix
// products (a repeat could be excised), so their length is at most |H| - 1
// and the search is complete at that depth.
MinimalResult FactorizationEngine::minimal_over(Index x, const Bitset& letter_set) const {
  const FiniteMonoid& m = p_.monoid;
  const std::vector<Index> letters = letter_set.members();
  const DenseClasses dc(p_.rel, letters);
  const std::size_t c = dc.reps.size();
  const bool to_identity = x == m.identity();
  MinimalResult res;
  res.length_cap = to_identity ? m.size() : m.size() - 1;

  StateStore st(c);
  std::vector<std::vector<std::uint32_t>> seen(m.size());
  std::vector<std::uint16_t> zero(c, 0), scratch(c);
  st.add(m.identity(), kAbsent, std::uint32_t(-1), zero.data());
  if (!to_identity) seen[m.identity()].push_back(0);
  std::vector<std::uint32_t> layer{0}, found;

  for (std::size_t len = 1; len <= res.length_cap && !layer.empty(); ++len) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : layer) {
      const Index from = st.prod[s];
      for (Index a : letters) {
        const Index q = m.mul(from, a);
        if (q == kAbsent) continue;
        std::copy(st.vec(s), st.vec(s) + c, scratch.begin());
        ++scratch[dc.id[a]];
        bool dominated = false;
        for (std::uint32_t o : seen[q])
          if (dense_subset(st.vec(o), scratch.data(), c)) {
            dominated = true;
            break;
          }
        if (dominated) continue;
        if (st.size() >= limits_.max_states) {
          res.certified = false;
          layer.clear();
          next.clear();
          break;
        }
        const auto id = static_cast<std::uint32_t>(st.add(q, a, s, scratch.data()));
        seen[q].push_back(id);
        if (q == x) found.push_back(id);
        else next.push_back(id);
      }
      if (!res.certified) break;
    }
    layer = std::move(next);
  }
  for (std::uint32_t s : found) res.classes.push_back({dc.to_vector(st.vec(s)), st.word(s)});
  std::sort(res.classes.begin(), res.classes.end(), [](const MinimalClass& a, const MinimalClass& b) {
    if (a.vector.total() != b.vector.total()) return a.vector.total() < b.vector.total();
    return a.vector < b.vector;
  });
  return res;
}

// A word over `letter_set` with product x whose class vector is exactly v.
std::optional<FactorWord> FactorizationEngine::realize_with(Index x, const ClassVector& v,
                                                            const Bitset& letter_set) const {
  const FiniteMonoid& m = p_.monoid;
  std::vector<Index> letters;
  std::map<Index, std::size_t> slot;
  for (std::size_t i = 0; i < v.entries.size(); ++i) slot[v.entries[i].first] = i;
  letter_set.for_each([&](Index a) {
    if (slot.count(p_.rel.class_of(a))) letters.push_back(a);
  });
  const std::size_t c = v.entries.size();
  std::vector<std::uint16_t> cap(c);
  for (std::size_t i = 0; i < c; ++i) cap[i] = static_cast<std::uint16_t>(v.entries[i].second);
  StateStore st(c);
  std::vector<std::uint16_t> zero(c, 0), scratch(c);
  st.add(m.identity(), kAbsent, std::uint32_t(-1), zero.data());
  std::vector<std::uint32_t> layer{0};
  const std::uint64_t total = v.total();
  for (std::uint64_t len = 1; len <= total && !layer.empty(); ++len) {
    std::vector<std::uint32_t> next;
    std::map<std::pair<Index, std::vector<std::uint16_t>>, bool> dedup;
    for (std::uint32_t s : layer)
      for (Index a : letters) {
        const std::size_t k = slot.at(p_.rel.class_of(a));
        if (st.vec(s)[k] >= cap[k]) continue;
        const Index q = m.mul(st.prod[s], a);
        if (q == kAbsent) continue;
        std::copy(st.vec(s), st.vec(s) + c, scratch.begin());
        ++scratch[k];
        if (!dedup.emplace(std::make_pair(q, scratch), true).second) continue;
        const auto id = static_cast<std::uint32_t>(st.add(q, a, s, scratch.data()));
        if (len == total && q == x) return st.word(id);
        next.push_back(id);
      }
    if (st.size() > limits_.max_states) throw NotComputable("state budget exceeded while realizing a class");
    layer = std::move(next);
  }
  return std::nullopt;
}

std::optional<std::vector<ClassVector>> FactorizationEngine::class_vectors(Index x, Alphabet a,
                                                                           std::size_t max_len) const {
  const FiniteMonoid& m = p_.monoid;
  const std::vector<Index> letters = this->letters(a).members();
  const DenseClasses dc(p_.rel, letters);
  const std::size_t c = dc.reps.size();
  StateStore st(c);
  std::vector<std::uint16_t> zero(c, 0), scratch(c);
  st.add(m.identity(), kAbsent, std::uint32_t(-1), zero.data());
  std::vector<std::uint32_t> layer{0};
  std::vector<ClassVector> out;
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::uint32_t> next;
    std::map<std::pair<Index, std::vector<std::uint16_t>>, bool> dedup;
    for (std::uint32_t s : layer)
      for (Index l : letters) {
        const Index q = m.mul(st.prod[s], l);
        if (q == kAbsent) continue;
        std::copy(st.vec(s), st.vec(s) + c, scratch.begin());
        ++scratch[dc.id[l]];
        if (!dedup.emplace(std::make_pair(q, scratch), true).second) continue;
        const auto id = static_cast<std::uint32_t>(st.add(q, l, s, scratch.data()));
        if (q == x) out.push_back(dc.to_vector(st.vec(id)));
        next.push_back(id);
        if (st.size() > limits_.max_states) return std::nullopt;
      }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<FactorWord> FactorizationEngine::shortest(Index x, const Bitset& letter_set) const {
  const FiniteMonoid& m = p_.monoid;
  const std::vector<Index> letters = letter_set.members();
  std::vector<Index> from(m.size(), kAbsent), via(m.size(), kAbsent);
  std::vector<bool> seen(m.size(), false);
  std::deque<Index> q;
  for (Index a : letters)
    if (!seen[a]) {
      seen[a] = true;
      via[a] = a;
      q.push_back(a);
    }
  while (!q.empty() && !seen[x]) {
    const Index cur = q.front();
    q.pop_front();
    for (Index a : letters) {
      const Index nxt = m.mul(cur, a);
      if (nxt == kAbsent || seen[nxt]) continue;
      seen[nxt] = true;
      from[nxt] = cur;
      via[nxt] = a;
      q.push_back(nxt);
    }
  }
  if (!seen[x]) return std::nullopt;
  FactorWord w;
  for (Index cur = x; cur != kAbsent; cur = from[cur]) w.letters.push_back(via[cur]);
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

}  // namespace premon
