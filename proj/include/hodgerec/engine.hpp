#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hodgerec/multiindex.hpp"
#include "hodgerec/rational.hpp"

namespace hodgerec {

// TwistedD: integral over the space whose 2g+2 marked points are all twisted.
// UntwistedD: the space with one extra untwisted point.
enum class Kind { TwistedD, UntwistedD };

inline char kind_char(Kind k) { return k == Kind::TwistedD ? 'D' : 'd'; }
std::optional<Kind> kind_from_text(const std::string& text);

struct IntegralKey {
  Kind kind = Kind::TwistedD;
  int g = 0;
  MultiIndex index;

  bool operator==(const IntegralKey&) const = default;
  std::string describe() const;  // e.g. "D(g=4; 4,2,1)"
};

// Total order used for all persisted / printed output: kind, g, index.
bool key_less(const IntegralKey& a, const IntegralKey& b);

struct IntegralKeyHash {
  std::size_t operator()(const IntegralKey& k) const {
    std::size_t h = k.index.hash();
    h = h * 0x100000001b3ull ^ static_cast<std::size_t>(k.g);
    return h * 2 + (k.kind == Kind::UntwistedD ? 1 : 0);
  }
};

struct MemoStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

// Write-once map from IntegralKey to its exact value. Safe for concurrent
// use; duplicate insertion of a key must carry an equal value.
class MemoStore {
 public:
  std::optional<Rational> lookup(const IntegralKey& key) const;
  // Idempotent: returns the stored value; throws consistency_error if an
  // existing binding differs.
  Rational insert(const IntegralKey& key, Rational value);
  std::size_t size() const;
  MemoStats stats() const;
  std::vector<std::pair<IntegralKey, Rational>> snapshot_sorted() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<IntegralKey, Rational, IntegralKeyHash> map_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

// Memoized exact evaluation of the integrals D_{(i),2g+2} (TwistedD) and
// d_{(i),2g+2} (UntwistedD).
//
// eval applies, in order: rank vanishing (any entry > g), dimension
// vanishing (TwistedD with |i| > 2g-1; UntwistedD with 0 < |i| >= 2g), the
// base value 1/2 for the empty index (all g >= 0, the g = 0 case being the
// boundary convention D_{(),2} = d_{(),2} = 1/2), the pure-Hodge recursion
// when TwistedD carries no psi-class (|i| = 2g-1), and otherwise the
// psi-class recursions at k = 0.
class Engine {
 public:
  Rational eval(const IntegralKey& key);
  Rational eval(Kind kind, int g, const MultiIndex& index);

  // Recursion for D with at least one psi-class. Requires |i| <= 2g-2 and
  // 0 <= k <= 2g-2-|i|; every k in that range yields the same value. The
  // tuple is consumed positionally; permutations do not change the result.
  Rational nph_D(int g, const RawTuple& i, int k);
  Rational nph_D(int g, const MultiIndex& i, int k);

  // Recursion for d. Requires |i| <= 2g-1 and 0 <= k <= 2g-1-|i|.
  Rational nph_d(int g, const RawTuple& i, int k);
  Rational nph_d(int g, const MultiIndex& i, int k);

  // Pure-Hodge recursion, |i| = 2g-1, i nonempty, max entry <= g. The
  // distinguished entry is the maximum; any positive entry gives the same
  // value (see pure_hodge_D_at).
  Rational pure_hodge_D(int g, const MultiIndex& i);
  Rational pure_hodge_D_at(int g, const MultiIndex& i, std::size_t pivot);

  // Fixed-locus contribution sums entering the pure-Hodge recursion; m is
  // the index with the distinguished entry i_n removed.
  Rational cont_gamma1(int g, const RawTuple& m, int i_n);
  Rational cont_even(int g, const RawTuple& m, int i_n);
  Rational cont_odd(int g, const RawTuple& m, int i_n);

  // 2^{|i|+1} * eval(key); throws consistency_error if not an integer.
  Int normalized_integer(const IntegralKey& key);
  Int normalized_integer(Kind kind, int g, const MultiIndex& index);

  MemoStats stats() const { return memo_.stats(); }
  std::size_t memo_size() const { return memo_.size(); }
  std::vector<std::pair<IntegralKey, Rational>> export_memo() const {
    return memo_.snapshot_sorted();
  }
  // Pre-seed a value (cache load). Throws consistency_error on a conflict
  // with an already-known value.
  void import_value(const IntegralKey& key, const Rational& value);

 private:
  MemoStore memo_;
};

}  // namespace hodgerec
