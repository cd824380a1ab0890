#include "premon/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "premon/bitset.hpp"

namespace premon {

namespace {

Letters parse_side(const std::string& alphabet, const std::string& s) {
  Letters out;
  for (std::size_t i = 0; i < s.size();) {
    const auto pos = alphabet.find(s[i]);
    if (pos == std::string::npos) throw InputError(std::string("letter '") + s[i] + "' is not in the alphabet");
    std::size_t j = i + 1, exp = 0;
    bool has_exp = false;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
      exp = exp * 10 + static_cast<std::size_t>(s[j] - '0');
      has_exp = true;
      if (exp > 64) throw InputError("exponent too large in relation");
      ++j;
    }
    out.insert(out.end(), has_exp ? exp : 1, static_cast<unsigned char>(pos));
    i = j;
  }
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& alphabet, const std::string& relations) {
  Presentation p;
  p.alphabet = alphabet;
  if (alphabet.empty()) throw InputError("empty alphabet");
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet.find(alphabet[i]) != i || std::isdigit(static_cast<unsigned char>(alphabet[i])))
      throw InputError("alphabet letters must be distinct non-digits");
  std::size_t start = 0;
  while (start <= relations.size() && !relations.empty()) {
    auto end = relations.find(',', start);
    if (end == std::string::npos) end = relations.size();
    const std::string rel = relations.substr(start, end - start);
    const auto eq = rel.find('=');
    if (eq == std::string::npos) throw InputError("relation '" + rel + "' has no '='");
    p.relations.emplace_back(parse_side(alphabet, rel.substr(0, eq)), parse_side(alphabet, rel.substr(eq + 1)));
    start = end + 1;
  }
  return p;
}

BoundedCongruence::BoundedCongruence(Presentation p, std::size_t bound) : p_(std::move(p)), bound_(bound) {
  std::size_t need = 0;
  for (const auto& [l, r] : p_.relations) need = std::max({need, l.size(), r.size()});
  if (bound_ < need) throw BoundTooSmall(need);
  const std::size_t k = p_.alphabet.size();
  std::size_t total = 0, layer = 1;
  for (std::size_t len = 0; len <= bound_; ++len, layer *= k) {
    total += layer;
    if (total > 4'000'000) throw InputError("too many words within the bound");
  }

  words_.reserve(total);
  words_.push_back({});
  for (std::size_t len = 1, first = 0, count = 1; len <= bound_; ++len) {
    const std::size_t next_first = words_.size();
    for (std::size_t i = first; i < first + count; ++i)
      for (std::size_t c = 0; c < k; ++c) {
        Letters w = words_[i];
        w.push_back(static_cast<unsigned char>(c));
        words_.push_back(std::move(w));
      }
    first = next_first;
    count *= k;
  }
  // words_ is shortlex: prefixes are generated in lexicographic order.
  parent_.resize(words_.size());
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});

  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    const Letters& w = words_[wi];
    for (const auto& [l, r] : p_.relations)
      for (int dir = 0; dir < 2; ++dir) {
        const Letters& from = dir ? r : l;
        const Letters& to = dir ? l : r;
        if (from.empty() && to.empty()) continue;
        if (w.size() < from.size() || w.size() - from.size() + to.size() > bound_) continue;
        for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
          if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) continue;
          Letters v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          v.insert(v.end(), to.begin(), to.end());
          v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + from.size()), w.end());
          unite(wi, index_of(v));
        }
      }
  }
  // Close under multiplication by letters on either side.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      const std::size_t rep = find(wi);
      if (rep == wi || words_[wi].size() + 1 > bound_ || words_[rep].size() + 1 > bound_) continue;
      for (std::size_t c = 0; c < k; ++c) {
        Letters a = words_[wi], b = words_[rep];
        a.push_back(static_cast<unsigned char>(c));
        b.push_back(static_cast<unsigned char>(c));
        changed |= unite(index_of(a), index_of(b));
        Letters a2{static_cast<unsigned char>(c)}, b2{static_cast<unsigned char>(c)};
        a2.insert(a2.end(), words_[wi].begin(), words_[wi].end());
        b2.insert(b2.end(), words_[rep].begin(), words_[rep].end());
        changed |= unite(index_of(a2), index_of(b2));
      }
    }
  }

  word_class_.assign(words_.size(), 0);
  std::vector<std::size_t> id_of_root(words_.size(), SIZE_MAX);
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    const std::size_t r = find(wi);
    if (id_of_root[r] == SIZE_MAX) {
      id_of_root[r] = class_ids_.size();
      class_ids_.push_back(r);
      class_members_.emplace_back();
    }
    word_class_[wi] = id_of_root[r];
    class_members_[id_of_root[r]].push_back(wi);
  }
}

std::size_t BoundedCongruence::index_of(const Letters& w) const {
  if (w.size() > bound_) throw QueryError("word longer than the bound");
  const std::size_t k = p_.alphabet.size();
  std::size_t offset = 0, layer = 1;
  for (std::size_t len = 0; len < w.size(); ++len, layer *= k) offset += layer;
  std::size_t rank = 0;
  for (unsigned char c : w) rank = rank * k + c;
  return offset + rank;
}

std::size_t BoundedCongruence::find(std::size_t x) const {
  while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
  return x;
}

bool BoundedCongruence::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent_[b] = a;  // the shortlex-least word stays the root
  return true;
}

std::size_t BoundedCongruence::class_of(std::size_t word) const { return class_ids_[word_class_[word]]; }
std::size_t BoundedCongruence::class_id(std::size_t word) const { return word_class_[word]; }

std::string BoundedCongruence::text(const Letters& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    s += p_.alphabet[w[i]];
    if (j - i > 1) s += std::to_string(j - i);
    i = j;
  }
  return s;
}

PresentationEvidence explore(const BoundedCongruence& c, std::size_t max_cycles) {
  PresentationEvidence ev;
  ev.bound = c.bound();
  ev.words = c.word_count();
  const std::size_t nc = c.class_count();
  ev.classes = nc;

  // below[C] = classes D with D | C (some member of C has a factor in D).
  std::vector<Bitset> below(nc, Bitset(nc));
  for (std::size_t wi = 0; wi < c.word_count(); ++wi) {
    const Letters& w = c.word(wi);
    const std::size_t cw = c.class_id(wi);
    for (std::size_t i = 0; i <= w.size(); ++i)
      for (std::size_t j = i; j <= w.size(); ++j) {
        const Letters f(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
        const std::size_t fi = c.index_of(f);
        below[cw].set(c.class_id(fi));
        if (!f.empty() && f.size() < w.size() && c.class_id(fi) == cw && ev.cycles.size() < max_cycles)
          ev.cycles.emplace_back(c.text(w), c.text(f));
      }
  }
  for (std::size_t k = 0; k < nc; ++k)
    for (std::size_t i = 0; i < nc; ++i)
      if (below[i].test(k)) below[i] |= below[k];

  auto strict = [&](std::size_t d, std::size_t cc) { return below[cc].test(d) && !below[d].test(cc); };
  std::vector<std::size_t> order(nc), minlen(nc);
  for (std::size_t i = 0; i < nc; ++i) minlen[i] = c.word(c.members(i).front()).size();
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a].count() < below[b].count(); });

  auto longest = [&](bool non_shrinking) {
    std::vector<std::size_t> best(nc, 1), next(nc, SIZE_MAX);
    for (std::size_t cc : order)
      below[cc].for_each([&](Index d) {
        if (!strict(d, cc) || (non_shrinking && minlen[d] < minlen[cc])) return;
        if (best[d] + 1 > best[cc]) {
          best[cc] = best[d] + 1;
          next[cc] = d;
        }
      });
    std::size_t top = 0;
    for (std::size_t i = 0; i < nc; ++i)
      if (best[i] > best[top]) top = i;
    DivisibilityChain ch;
    for (std::size_t cur = top; cur != SIZE_MAX; cur = next[cur]) {
      ch.classes.push_back(cur);
      ch.representatives.push_back(c.text(c.word(c.members(cur).front())));
    }
    return ch;
  };
  ev.longest_chain = longest(false);
  ev.non_shrinking_chain = longest(true);
  return ev;
}

}  // namespace premon
