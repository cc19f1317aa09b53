#include "hodgerec/multiindex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hodgerec {

int weight_of(const RawTuple& t) {
  return std::accumulate(t.begin(), t.end(), 0);
}

MultiIndex MultiIndex::canonicalize(const RawTuple& raw) {
  MultiIndex out;
  for (int e : raw) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
    if (e > 0) out.entries_.push_back(e);
  }
  std::sort(out.entries_.begin(), out.entries_.end(), std::greater<int>());
  out.weight_ = weight_of(out.entries_);
  return out;
}

std::string MultiIndex::text() const {
  if (entries_.empty()) return "-";
  std::string s;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(entries_[j]);
  }
  return s;
}

std::optional<MultiIndex> MultiIndex::parse(const std::string& text) {
  auto raw = parse_raw_tuple(text);
  if (!raw) return std::nullopt;
  return canonicalize(*raw);
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = weight_ <=> other.weight_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      entries_.begin(), entries_.end(), other.entries_.begin(),
      other.entries_.end());
}

std::size_t MultiIndex::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int e : entries_)
    h = h * 0x100000001b3ull ^ static_cast<std::size_t>(e);
  return h;
}

std::optional<RawTuple> parse_raw_tuple(const std::string& text) {
  if (text == "-") return RawTuple{};
  if (text.empty()) return std::nullopt;
  RawTuple out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty() || piece.size() > 6) return std::nullopt;
    int value = 0;
    for (char c : piece) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + (c - '0');
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<RawTuple> sub_indices(const RawTuple& i) {
  std::vector<RawTuple> out;
  RawTuple cur(i.size(), 0);
  for (;;) {
    out.push_back(cur);
    // odometer with per-component limit i_j, last component fastest
    std::size_t j = i.size();
    while (j > 0 && cur[j - 1] == i[j - 1]) cur[--j] = 0;
    if (j == 0) break;
    ++cur[j - 1];
  }
  return out;
}

std::vector<std::pair<RawTuple, RawTuple>> decompositions(const RawTuple& m) {
  std::vector<std::pair<RawTuple, RawTuple>> out;
  for (RawTuple& l : sub_indices(m)) {
    RawTuple rest(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) rest[j] = m[j] - l[j];
    out.emplace_back(std::move(l), std::move(rest));
  }
  return out;
}

namespace {

void partitions_into(int weight, int max_part, RawTuple& prefix,
                     std::vector<MultiIndex>& out) {
  if (weight == 0) {
    out.push_back(MultiIndex::canonicalize(prefix));
    return;
  }
  int low = prefix.empty() ? 1 : prefix.back();
  for (int part = low; part <= std::min(weight, max_part); ++part) {
    prefix.push_back(part);
    partitions_into(weight - part, max_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> canonical_indices(int weight_max, int max_entry) {
  std::vector<MultiIndex> out;
  RawTuple prefix;
  for (int w = 0; w <= weight_max; ++w) {
    auto begin = static_cast<std::ptrdiff_t>(out.size());
    partitions_into(w, max_entry, prefix, out);
    std::sort(out.begin() + begin, out.end());
  }
  return out;
}

}  // namespace hodgerec
