#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace premon {

// Exact eventually periodic subset of the positive integers. Members below
// offset() are listed explicitly; from offset() on, k is a member iff
// (k mod period()) is one of residues(). Always kept canonical: minimal
// period, then minimal offset. A finite set has offset = max + 1, period 1
// and no residues.
class LengthSet {
 public:
  LengthSet() = default;

  static LengthSet finite(std::vector<std::uint64_t> members);
  // Members are read from `prefix[k]` for 1 <= k < start (prefix[0] ignored)
  // and from `cycle[(k - start) mod cycle.size()]` for k >= start.
  static LengthSet from_pattern(const std::vector<bool>& prefix, std::uint64_t start,
                                const std::vector<bool>& cycle);
  static LengthSet periodic(std::vector<std::uint64_t> below, std::uint64_t offset, std::uint64_t period,
                            std::vector<std::uint64_t> residues);

  bool contains(std::uint64_t k) const;
  bool empty() const { return below_.empty() && residues_.empty(); }
  bool is_finite() const { return residues_.empty(); }
  std::optional<std::uint64_t> min() const;
  std::optional<std::uint64_t> max() const;  // nullopt if infinite or empty
  std::size_t finite_size() const { return below_.size(); }
  bool singleton() const { return is_finite() && below_.size() == 1; }

  const std::vector<std::uint64_t>& finite_part() const { return below_; }
  std::uint64_t offset() const { return offset_; }
  std::uint64_t period() const { return period_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }

  std::vector<std::uint64_t> members_upto(std::uint64_t bound) const;
  std::string to_string() const;

  friend bool operator==(const LengthSet&, const LengthSet&) = default;

 private:
  void canonicalize(std::vector<bool> prefix, std::vector<bool> cycle, std::uint64_t start);

  std::vector<std::uint64_t> below_;
  std::uint64_t offset_ = 1;
  std::uint64_t period_ = 1;
  std::vector<std::uint64_t> residues_;
};

}  // namespace premon
