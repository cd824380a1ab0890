#include "premon/length_set.hpp"

#include <algorithm>
#include <sstream>

#include "premon/types.hpp"

namespace premon {

LengthSet LengthSet::finite(std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.front() == 0) throw Error("length sets contain positive integers only");
  const std::uint64_t top = members.empty() ? 0 : members.back();
  std::vector<bool> prefix(top + 1, false);
  for (auto k : members) prefix[k] = true;
  LengthSet s;
  s.canonicalize(std::move(prefix), {false}, top + 1);
  return s;
}

LengthSet LengthSet::from_pattern(const std::vector<bool>& prefix, std::uint64_t start,
                                  const std::vector<bool>& cycle) {
  if (start == 0 || cycle.empty() || prefix.size() < start) throw Error("malformed length pattern");
  LengthSet s;
  s.canonicalize(std::vector<bool>(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(start)),
                 cycle, start);
  return s;
}

LengthSet LengthSet::periodic(std::vector<std::uint64_t> below, std::uint64_t offset, std::uint64_t period,
                              std::vector<std::uint64_t> residues) {
  if (offset == 0 || period == 0) throw Error("offset and period must be positive");
  std::vector<bool> prefix(offset, false);
  for (auto k : below) {
    if (k == 0 || k >= offset) throw Error("finite part must lie in [1, offset)");
    prefix[k] = true;
  }
  std::vector<bool> cycle(period, false);
  for (auto r : residues) {
    if (r >= period) throw Error("residue out of range");
    // position i of the cycle is length offset + i
    cycle[(r + period - offset % period) % period] = true;
  }
  LengthSet s;
  s.canonicalize(std::move(prefix), std::move(cycle), offset);
  return s;
}

void LengthSet::canonicalize(std::vector<bool> prefix, std::vector<bool> cycle, std::uint64_t start) {
  std::uint64_t p = cycle.size();
  for (std::uint64_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool ok = true;
    for (std::uint64_t i = d; i < p && ok; ++i) ok = cycle[i] == cycle[i % d];
    if (ok) {
      cycle.resize(d);
      p = d;
      break;
    }
  }
  while (start > 1 && prefix[start - 1] == cycle[p - 1]) {
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    --start;
  }
  below_.clear();
  residues_.clear();
  for (std::uint64_t k = 1; k < start; ++k)
    if (prefix[k]) below_.push_back(k);
  if (std::none_of(cycle.begin(), cycle.end(), [](bool b) { return b; })) {
    offset_ = below_.empty() ? 1 : below_.back() + 1;
    period_ = 1;
    return;
  }
  offset_ = start;
  period_ = p;
  for (std::uint64_t i = 0; i < p; ++i)
    if (cycle[i]) residues_.push_back((start + i) % p);
  std::sort(residues_.begin(), residues_.end());
}

bool LengthSet::contains(std::uint64_t k) const {
  if (k == 0) return false;
  if (k < offset_) return std::binary_search(below_.begin(), below_.end(), k);
  return std::binary_search(residues_.begin(), residues_.end(), k % period_);
}

std::optional<std::uint64_t> LengthSet::min() const {
  if (!below_.empty()) return below_.front();
  if (residues_.empty()) return std::nullopt;
  for (std::uint64_t k = offset_;; ++k)
    if (contains(k)) return k;
}

std::optional<std::uint64_t> LengthSet::max() const {
  if (!is_finite() || below_.empty()) return std::nullopt;
  return below_.back();
}

std::vector<std::uint64_t> LengthSet::members_upto(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= bound; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

std::string LengthSet::to_string() const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::uint64_t>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << '}';
  };
  if (is_finite()) {
    list(below_);
    return os.str();
  }
  if (!below_.empty()) {
    list(below_);
    os << " u ";
  }
  if (period_ == 1) {
    os << "{k >= " << offset_ << '}';
  } else {
    os << "{k >= " << offset_ << " : k mod " << period_ << " in ";
    list(residues_);
    os << '}';
  }
  return os.str();
}

}  // namespace premon
