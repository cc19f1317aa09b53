#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodgerec {

// Order-significant tuple of nonnegative entries. Working representation
// inside the recursion sums; converted to a MultiIndex before any memo or
// output use.
using RawTuple = std::vector<int>;

int weight_of(const RawTuple& t);

// Exponent vector of a lambda-monomial in canonical form: zeros dropped
// (lambda_0 = 1), remaining entries sorted nonincreasing. Two MultiIndex
// values are equal iff they denote the same monomial.
class MultiIndex {
 public:
  MultiIndex() = default;

  static MultiIndex canonicalize(const RawTuple& raw);

  const std::vector<int>& entries() const { return entries_; }
  int weight() const { return weight_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  int max_entry() const { return entries_.empty() ? 0 : entries_.front(); }

  // "4,2,1"; the empty index renders as "-".
  std::string text() const;
  static std::optional<MultiIndex> parse(const std::string& text);

  bool operator==(const MultiIndex& other) const {
    return entries_ == other.entries_;
  }
  // Ordered by weight, then lexicographically on the canonical sequence.
  std::strong_ordering operator<=>(const MultiIndex& other) const;

  std::size_t hash() const;

 private:
  std::vector<int> entries_;
  int weight_ = 0;
};

// "1,2,4" -> (1,2,4); "-" -> (); rejects anything else.
std::optional<RawTuple> parse_raw_tuple(const std::string& text);

// All l with 0 <= l_j <= i_j componentwise, lexicographic ascending.
// Count is prod(i_j + 1); the empty tuple yields [()].
std::vector<RawTuple> sub_indices(const RawTuple& i);

// All pairs (l1, l2) with l1 + l2 = m componentwise, ordered by l1
// lexicographic ascending.
std::vector<std::pair<RawTuple, RawTuple>> decompositions(const RawTuple& m);

inline RawTuple append(RawTuple i, int e) {
  i.push_back(e);
  return i;
}

// Canonical indices (partitions into parts in [1, max_entry]) of every weight
// in [0, weight_max], ordered by weight then lexicographically.
std::vector<MultiIndex> canonical_indices(int weight_max, int max_entry);

}  // namespace hodgerec
