#include "premon/words.hpp"

#include <algorithm>

namespace premon {

std::uint64_t ClassVector::total() const {
  std::uint64_t t = 0;
  for (const auto& e : entries) t += e.second;
  return t;
}

bool ClassVector::is_subset_of(const ClassVector& o) const {
  auto it = o.entries.begin();
  for (const auto& [cls, cnt] : entries) {
    while (it != o.entries.end() && it->first < cls) ++it;
    if (it == o.entries.end() || it->first != cls || it->second < cnt) return false;
  }
  return true;
}

ClassVector class_vector(const PreorderRel& rel, const FactorWord& w) {
  std::vector<Index> cls;
  cls.reserve(w.length());
  for (Index a : w.letters) cls.push_back(rel.class_of(a));
  std::sort(cls.begin(), cls.end());
  ClassVector v;
  for (Index c : cls) {
    if (!v.entries.empty() && v.entries.back().first == c) ++v.entries.back().second;
    else v.entries.emplace_back(c, 1);
  }
  return v;
}

bool shuffle_leq(const PreorderRel& rel, const FactorWord& u, const FactorWord& v) {
  if (u.length() > v.length()) return false;
  return class_vector(rel, u).is_subset_of(class_vector(rel, v));
}

Index pi(const FiniteMonoid& m, const FactorWord& w) { return pi(m, w.letters); }

}  // namespace premon
