#include "hodgerec/engine.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace hodgerec {

std::optional<Kind> kind_from_text(const std::string& text) {
  if (text == "D") return Kind::TwistedD;
  if (text == "d") return Kind::UntwistedD;
  return std::nullopt;
}

std::string IntegralKey::describe() const {
  std::string s(1, kind_char(kind));
  s += "(g=" + std::to_string(g) + "; " + index.text() + ")";
  return s;
}

bool key_less(const IntegralKey& a, const IntegralKey& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.g != b.g) return a.g < b.g;
  return a.index < b.index;
}

std::optional<Rational> MemoStore::lookup(const IntegralKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

Rational MemoStore::insert(const IntegralKey& key, Rational value) {
  std::unique_lock lock(mutex_);
  auto [it, fresh] = map_.try_emplace(key, std::move(value));
  if (!fresh && it->second != value)
    throw consistency_error("memo conflict for " + key.describe() + ": " +
                            to_string(it->second) + " vs " + to_string(value));
  return it->second;
}

std::size_t MemoStore::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

MemoStats MemoStore::stats() const {
  return {hits_.load(std::memory_order_relaxed),
          misses_.load(std::memory_order_relaxed)};
}

std::vector<std::pair<IntegralKey, Rational>> MemoStore::snapshot_sorted()
    const {
  std::vector<std::pair<IntegralKey, Rational>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return key_less(a.first, b.first); });
  return out;
}

namespace {

RawTuple raw_of(const MultiIndex& i) { return i.entries(); }

// Splits of a fixed positional representative: (canonical l, canonical i - l,
// parity of |l|). Shared by both psi-class recursions.
struct Split {
  MultiIndex low;   // canonicalize(l)
  MultiIndex high;  // canonicalize(i - l)
  bool odd;         // |l| odd
};

std::vector<Split> splits_of(const RawTuple& i) {
  std::vector<Split> out;
  for (const auto& [l, rest] : decompositions(i)) {
    out.push_back({MultiIndex::canonicalize(l), MultiIndex::canonicalize(rest),
                   weight_of(l) % 2 != 0});
  }
  return out;
}

}  // namespace

Rational Engine::eval(Kind kind, int g, const MultiIndex& index) {
  return eval(IntegralKey{kind, g, index});
}

Rational Engine::eval(const IntegralKey& key) {
  if (key.g < 0) throw std::invalid_argument("eval: negative genus");
  const int g = key.g;
  const int w = key.index.weight();
  // The empty index is 1/2 at every genus; at g = 0 this is the boundary
  // convention and must win over the dimension count below.
  if (key.index.empty()) return Rational(1, 2);
  // Chern classes of the rank-g Hodge bundle vanish above g.
  if (key.index.max_entry() > g) return 0;
  if (key.kind == Kind::TwistedD) {
    if (w > 2 * g - 1) return 0;
  } else {
    // A degree-2g lambda-monomial is pulled back from a (2g-1)-dimensional
    // space, hence zero in Chow.
    if (w >= 2 * g) return 0;
  }
  if (auto hit = memo_.lookup(key)) return *hit;

  Rational value;
  if (key.kind == Kind::TwistedD) {
    value = (w == 2 * g - 1) ? pure_hodge_D(g, key.index)
                             : nph_D(g, key.index, 0);
  } else {
    value = nph_d(g, key.index, 0);
  }
  return memo_.insert(key, std::move(value));
}

Rational Engine::nph_D(int g, const MultiIndex& i, int k) {
  return nph_D(g, raw_of(i), k);
}

Rational Engine::nph_d(int g, const MultiIndex& i, int k) {
  return nph_d(g, raw_of(i), k);
}

Rational Engine::nph_D(int g, const RawTuple& i, int k) {
  const int w = weight_of(i);
  if (g < 1) throw std::invalid_argument("nph_D: requires g > 0");
  if (w > 2 * g - 2)
    throw std::invalid_argument("nph_D: requires |i| <= 2g-2, got |i| = " +
                                std::to_string(w) + " at g = " + std::to_string(g));
  if (k < 0 || k > 2 * g - 2 - w)
    throw std::invalid_argument("nph_D: k out of range [0, 2g-2-|i|], got k = " +
                                std::to_string(k));

  const auto splits = splits_of(i);
  Rational untwisted_part = 0;
  for (int g2 = 0; g2 <= (2 * g - 2 - k) / 2; ++g2) {
    const int g1 = g - 1 - g2;
    const Int b = binomial(2 * g - 1 - k, 2 * g2 + 1);
    if (b == 0) continue;
    Rational inner = 0;
    for (const Split& s : splits) {
      Rational high = eval(Kind::UntwistedD, g1, s.high);
      if (high == 0) continue;
      Rational low = eval(Kind::UntwistedD, g2, s.low);
      if (low == 0) continue;
      high *= low;
      if (s.odd) inner -= high; else inner += high;
    }
    untwisted_part += Rational(b) * inner;
  }

  Rational twisted_part = 0;
  for (int g2 = 1; g2 <= (2 * g - 1 - k) / 2; ++g2) {
    const int g1 = g - g2;
    const Int b = binomial(2 * g - 1 - k, 2 * g2);
    if (b == 0) continue;
    Rational inner = 0;
    for (const Split& s : splits) {
      Rational high = eval(Kind::TwistedD, g1, s.high);
      if (high == 0) continue;
      Rational low = eval(Kind::TwistedD, g2, s.low);
      if (low == 0) continue;
      high *= low;
      if (s.odd) inner -= high; else inner += high;
    }
    twisted_part += Rational(b) * inner;
  }

  return 2 * (untwisted_part - twisted_part);
}

Rational Engine::nph_d(int g, const RawTuple& i, int k) {
  const int w = weight_of(i);
  if (g < 1) throw std::invalid_argument("nph_d: requires g > 0");
  if (w > 2 * g - 1)
    throw std::invalid_argument("nph_d: requires |i| <= 2g-1, got |i| = " +
                                std::to_string(w) + " at g = " + std::to_string(g));
  if (k < 0 || k > 2 * g - 1 - w)
    throw std::invalid_argument("nph_d: k out of range [0, 2g-1-|i|], got k = " +
                                std::to_string(k));

  const auto splits = splits_of(i);
  Rational twisted_part = 0;
  for (int g2 = 0; g2 <= (2 * g - 1 - k) / 2; ++g2) {
    const int g1 = g - g2;
    const Int b = binomial(2 * g - k, 2 * g2 + 1);
    if (b == 0) continue;
    Rational inner = 0;
    for (const Split& s : splits) {
      Rational high = eval(Kind::TwistedD, g1, s.high);
      if (high == 0) continue;
      Rational low = eval(Kind::TwistedD, g2, s.low);
      if (low == 0) continue;
      high *= low;
      if (s.odd) inner -= high; else inner += high;
    }
    twisted_part += Rational(b) * inner;
  }

  Rational untwisted_part = 0;
  for (int g2 = 0; g2 <= (2 * g - k) / 2 - 1; ++g2) {
    const int g1 = g - 1 - g2;
    const Int b = binomial(2 * g - k, 2 * g2 + 2);
    if (b == 0) continue;
    Rational inner = 0;
    for (const Split& s : splits) {
      Rational high = eval(Kind::UntwistedD, g1, s.high);
      if (high == 0) continue;
      Rational low = eval(Kind::UntwistedD, g2, s.low);
      if (low == 0) continue;
      high *= low;
      if (s.odd) inner -= high; else inner += high;
    }
    untwisted_part += Rational(b) * inner;
  }

  return 2 * (twisted_part - untwisted_part);
}

Rational Engine::pure_hodge_D(int g, const MultiIndex& i) {
  return pure_hodge_D_at(g, i, 0);
}

Rational Engine::pure_hodge_D_at(int g, const MultiIndex& i,
                                 std::size_t pivot) {
  if (g < 1) throw std::invalid_argument("pure_hodge_D: requires g > 0");
  if (i.empty())
    throw std::invalid_argument("pure_hodge_D: index must be nonempty");
  if (i.weight() != 2 * g - 1)
    throw std::invalid_argument("pure_hodge_D: requires |i| = 2g-1, got |i| = " +
                                std::to_string(i.weight()) + " at g = " +
                                std::to_string(g));
  if (i.max_entry() > g)
    throw std::invalid_argument("pure_hodge_D: requires max entry <= g");
  if (pivot >= i.size())
    throw std::invalid_argument("pure_hodge_D: pivot out of range");

  const int i_n = i.entries()[pivot];
  RawTuple m = i.entries();
  m.erase(m.begin() + static_cast<std::ptrdiff_t>(pivot));

  // Descendant terms of the isolated-term identity: the lower-degree
  // integrals D_{(m, i_n - r), 2g+2}, 1 <= r <= i_n, weighted by
  // C(g-i_n+r, r+1) + (1/2) C(g-i_n+r, r), with overall sign (-1)^{i_n+1}.
  Rational descend = 0;
  for (int r = 1; r <= i_n; ++r) {
    Rational coeff(binomial(g - i_n + r, r + 1));
    coeff += Rational(binomial(g - i_n + r, r)) / 2;
    if (coeff == 0) continue;
    descend +=
        coeff * eval(Kind::TwistedD, g, MultiIndex::canonicalize(append(m, i_n - r)));
  }
  if (i_n % 2 == 0) descend = -descend;

  Rational total =
      descend + cont_gamma1(g, m, i_n) + cont_even(g, m, i_n) + cont_odd(g, m, i_n);

  Rational divisor(i_n);
  if (i_n % 2 == 0) divisor = -divisor;  // i_n * (-1)^{i_n+1}
  return total / divisor;
}

Rational Engine::cont_gamma1(int g, const RawTuple& m, int i_n) {
  if (g < 1) throw std::invalid_argument("cont_gamma1: requires g > 0");
  Rational sum = 0;
  for (int r = 1; r <= i_n; ++r) {
    const Int b = binomial(g - i_n + r, r + 1);
    if (b == 0) continue;
    sum += Rational(b) *
           eval(Kind::UntwistedD, g - 1, MultiIndex::canonicalize(append(m, i_n - r)));
  }
  Rational out = Rational(2 * g + 1) * sum;
  if (i_n % 2 != 0) out = -out;  // (-1)^{i_n}
  return out;
}

Rational Engine::cont_even(int g, const RawTuple& m, int i_n) {
  if (g < 1) throw std::invalid_argument("cont_even: requires g > 0");
  const auto decos = decompositions(m);
  Rational total = 0;
  for (int g1 = 1; g1 <= g - 1; ++g1) {
    const int g2 = g - g1;
    const Rational big(binomial(2 * g + 1, 2 * g2));
    for (const auto& [l1, l2] : decos) {
      const int w2 = weight_of(l2);
      // p + q = i_n + 1 enters with weight 2, p + q = i_n with weight 1.
      for (int target : {i_n + 1, i_n}) {
        const int mult = (target == i_n + 1) ? 2 : 1;
        for (int q = 0; q <= target; ++q) {
          const int p = target - q;
          Rational right =
              eval(Kind::TwistedD, g2, MultiIndex::canonicalize(append(l2, q)));
          if (right == 0) continue;
          right *= big * mult;
          for (int r = 0; r <= p; ++r) {
            const Int small = binomial(g1 - p + r, r);
            if (small == 0) continue;
            Rational left =
                eval(Kind::TwistedD, g1, MultiIndex::canonicalize(append(l1, p - r)));
            if (left == 0) continue;
            Rational term = Rational(small) * left * right;
            // (-1)^{2g2 - 1 - q - |l2|}
            if ((q + w2) % 2 == 0) total -= term; else total += term;
          }
        }
      }
    }
  }
  if (i_n % 2 != 0) total = -total;  // outer (-1)^{i_n}
  return total;
}

Rational Engine::cont_odd(int g, const RawTuple& m, int i_n) {
  if (g < 1) throw std::invalid_argument("cont_odd: requires g > 0");
  const auto decos = decompositions(m);
  Rational total = 0;
  for (int g1 = 1; g1 <= g - 2; ++g1) {
    const int g2 = g - 1 - g1;
    const Rational big(binomial(2 * g + 1, 2 * g2 + 1));
    for (const auto& [l1, l2] : decos) {
      const int w2 = weight_of(l2);
      for (int target : {i_n + 1, i_n}) {
        for (int q = 0; q <= target; ++q) {
          const int p = target - q;
          Rational right =
              eval(Kind::UntwistedD, g2, MultiIndex::canonicalize(append(l2, q)));
          if (right == 0) continue;
          right *= big;
          for (int r = 0; r <= p; ++r) {
            const Int small = binomial(g1 - p + r, r);
            if (small == 0) continue;
            Rational left =
                eval(Kind::UntwistedD, g1, MultiIndex::canonicalize(append(l1, p - r)));
            if (left == 0) continue;
            Rational term = Rational(small) * left * right;
            // (-1)^{2g2 - q - |l2|}
            if ((q + w2) % 2 != 0) total -= term; else total += term;
          }
        }
      }
    }
  }
  total *= 2;
  if (i_n % 2 != 0) total = -total;  // outer (-1)^{i_n}
  return total;
}

Int Engine::normalized_integer(const IntegralKey& key) {
  Rational scaled = eval(key) * Rational(pow2(key.index.weight() + 1));
  if (scaled.get_den() != 1)
    throw consistency_error("normalized value of " + key.describe() +
                            " is not an integer: " + to_string(scaled));
  return scaled.get_num();
}

Int Engine::normalized_integer(Kind kind, int g, const MultiIndex& index) {
  return normalized_integer(IntegralKey{kind, g, index});
}

void Engine::import_value(const IntegralKey& key, const Rational& value) {
  memo_.insert(key, value);
}

}  // namespace hodgerec
