#include "premon/higman.hpp"

namespace premon {

std::optional<std::vector<std::size_t>> scattered_subword(const Word& u, const Word& v) {
  std::vector<std::size_t> pos;
  pos.reserve(u.size());
  std::size_t j = 0;
  for (Index a : u) {
    while (j < v.size() && v[j] != a) ++j;
    if (j == v.size()) return std::nullopt;
    pos.push_back(j++);
  }
  return pos;
}

std::optional<std::vector<std::size_t>> embeds(const Word& u, const Word& v, const PreorderRel& rel) {
  std::vector<std::size_t> pos;
  pos.reserve(u.size());
  std::size_t j = 0;
  for (Index a : u) {
    while (j < v.size() && !rel.leq(a, v[j])) ++j;
    if (j == v.size()) return std::nullopt;
    pos.push_back(j++);
  }
  return pos;
}

std::optional<ErdosRadoHit> erdos_rado_scan(const std::vector<Word>& words, const PreorderRel& rel) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (auto e = embeds(words[i], words[j], rel)) return ErdosRadoHit{i, j, std::move(*e)};
  return std::nullopt;
}

namespace {

void all_words(std::size_t k, std::size_t max_len, Word& cur, std::vector<Word>& out) {
  out.push_back(cur);
  if (cur.size() == max_len) return;
  for (Index a = 0; a < k; ++a) {
    cur.push_back(a);
    all_words(k, max_len, cur, out);
    cur.pop_back();
  }
}

struct BadSearch {
  const std::vector<Word>& pool;
  std::vector<Word> cur, best;

  void run() {
    if (cur.size() > best.size()) best = cur;
    for (const Word& w : pool) {
      bool ok = true;
      for (const Word& earlier : cur)
        if (scattered_subword(earlier, w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(w);
      run();
      cur.pop_back();
    }
  }
};

}  // namespace

std::vector<Word> longest_bad_sequence(std::size_t k, const Word& first, std::size_t max_len) {
  std::vector<Word> pool;
  Word scratch;
  all_words(k, max_len, scratch, pool);
  BadSearch s{pool, {first}, {first}};
  s.run();
  return s.best;
}

}  // namespace premon
