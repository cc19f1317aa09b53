#include "hodgerec/series.hpp"

#include <numeric>
#include <stdexcept>

namespace hodgerec {

namespace {

int exp_weight(const std::vector<int>& exps) {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

// Exponent vectors of the given length with weight <= cap, lexicographic.
std::vector<std::vector<int>> exponent_vectors(int slots, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(slots), 0);
  for (;;) {
    out.push_back(cur);
    int j = slots;
    while (j > 0) {
      ++cur[static_cast<std::size_t>(j - 1)];
      if (exp_weight(cur) <= cap) break;
      cur[static_cast<std::size_t>(j - 1)] = 0;
      --j;
    }
    if (j == 0) break;
  }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int slots, int t_order, int weight_cap)
    : slots_(slots), t_order_(t_order), weight_cap_(weight_cap) {
  if (slots < 0 || weight_cap < 0)
    throw std::invalid_argument("TruncatedSeries: negative shape parameter");
}

Rational TruncatedSeries::coefficient(const std::vector<int>& exps,
                                      int tpow) const {
  auto it = coeffs_.find(Term{exps, tpow});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coefficient(const std::vector<int>& exps, int tpow,
                                      Rational value) {
  if (static_cast<int>(exps.size()) != slots_)
    throw std::invalid_argument("TruncatedSeries: wrong exponent length");
  if (tpow < 0 || tpow > t_order_ || exp_weight(exps) > weight_cap_) return;
  if (value == 0)
    coeffs_.erase(Term{exps, tpow});
  else
    coeffs_[Term{exps, tpow}] = std::move(value);
}

TruncatedSeries TruncatedSeries::d_dt(int times) const {
  if (times < 0) throw std::invalid_argument("d_dt: negative order");
  TruncatedSeries out(slots_, t_order_ - times, weight_cap_);
  for (const auto& [term, value] : coeffs_) {
    if (term.tpow < times) continue;
    Int falling = 1;
    for (int j = 0; j < times; ++j) falling *= term.tpow - j;
    out.coeffs_[Term{term.exps, term.tpow - times}] = value * Rational(falling);
  }
  return out;
}

TruncatedSeries TruncatedSeries::flip_s() const {
  TruncatedSeries out(slots_, t_order_, weight_cap_);
  for (const auto& [term, value] : coeffs_)
    out.coeffs_[term] = exp_weight(term.exps) % 2 != 0 ? -value : value;
  return out;
}

TruncatedSeries TruncatedSeries::multiply(const TruncatedSeries& other) const {
  if (slots_ != other.slots_)
    throw std::invalid_argument("multiply: slot count mismatch");
  TruncatedSeries out(slots_, std::min(t_order_, other.t_order_),
                      std::min(weight_cap_, other.weight_cap_));
  for (const auto& [ta, va] : coeffs_) {
    if (ta.tpow > out.t_order_) continue;
    for (const auto& [tb, vb] : other.coeffs_) {
      const int tpow = ta.tpow + tb.tpow;
      if (tpow > out.t_order_) continue;
      Term key{ta.exps, tpow};
      int weight = 0;
      for (int j = 0; j < slots_; ++j) {
        key.exps[static_cast<std::size_t>(j)] +=
            tb.exps[static_cast<std::size_t>(j)];
        weight += key.exps[static_cast<std::size_t>(j)];
      }
      if (weight > out.weight_cap_) continue;
      out.coeffs_[key] += va * vb;
    }
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TruncatedSeries TruncatedSeries::subtract(const TruncatedSeries& other) const {
  if (slots_ != other.slots_)
    throw std::invalid_argument("subtract: slot count mismatch");
  TruncatedSeries out(slots_, std::min(t_order_, other.t_order_),
                      std::min(weight_cap_, other.weight_cap_));
  auto in_range = [&](const Term& term) {
    return term.tpow <= out.t_order_ && exp_weight(term.exps) <= out.weight_cap_;
  };
  for (const auto& [term, value] : coeffs_)
    if (in_range(term)) out.coeffs_[term] = value;
  for (const auto& [term, value] : other.coeffs_)
    if (in_range(term)) out.coeffs_[term] -= value;
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TruncatedSeries TruncatedSeries::scale(const Rational& factor) const {
  TruncatedSeries out(slots_, t_order_, weight_cap_);
  if (factor == 0) return out;
  for (const auto& [term, value] : coeffs_) out.coeffs_[term] = value * factor;
  return out;
}

namespace {

TruncatedSeries build_series(Engine& engine, Kind kind, int slots, int t_order,
                             int weight_cap) {
  if (t_order < 2) throw std::invalid_argument("build: t_order must be >= 2");
  TruncatedSeries out(slots, t_order, weight_cap);
  const auto exps = exponent_vectors(slots, weight_cap);
  for (int g = 0; 2 * g + 2 <= t_order; ++g) {
    const Rational scale = make_rational(1, factorial(2 * g + 2));
    for (const auto& e : exps) {
      Rational value = engine.eval(kind, g, MultiIndex::canonicalize(e));
      if (value == 0) continue;
      out.set_coefficient(e, 2 * g + 2, value * scale);
    }
  }
  return out;
}

// A cell is compared when it survives truncation (tpow <= t_window) and its
// coefficient identity carries at least one psi-class (weight < tpow). Cells
// with weight >= tpow restate the recursions outside their validity range
// (pure-Hodge coefficients and the unstable t^0 cell) and are not governed
// by the system.
bool in_window(const TruncatedSeries::Term& term, int t_window) {
  return term.tpow <= t_window && exp_weight(term.exps) < term.tpow;
}

void compare_sides(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                   int t_window, std::vector<PdeCell>& mismatches) {
  for (const auto& [term, value] : lhs.coefficients()) {
    if (!in_window(term, t_window)) continue;
    Rational other = rhs.coefficient(term.exps, term.tpow);
    if (value != other)
      mismatches.push_back(PdeCell{term.exps, term.tpow, value, other});
  }
  // cells present only on the right (stored coefficients are never zero, so
  // an absent left cell reads as 0)
  for (const auto& [term, value] : rhs.coefficients()) {
    if (!in_window(term, t_window)) continue;
    if (lhs.coefficient(term.exps, term.tpow) == 0)
      mismatches.push_back(PdeCell{term.exps, term.tpow, Rational(0), value});
  }
}

}  // namespace

TruncatedSeries build_F(Engine& engine, int slots, int t_order,
                        int weight_cap) {
  return build_series(engine, Kind::TwistedD, slots, t_order, weight_cap);
}

TruncatedSeries build_G(Engine& engine, int slots, int t_order,
                        int weight_cap) {
  return build_series(engine, Kind::UntwistedD, slots, t_order, weight_cap);
}

PdeReport verify_pde(Engine& engine, int slots, int t_order, int weight_cap) {
  if (t_order < 4) throw std::invalid_argument("verify_pde: t_order must be >= 4");
  PdeReport report;
  report.slots = slots;
  report.t_order = t_order;
  report.weight_cap = weight_cap;
  report.t_window = t_order - 3;

  const TruncatedSeries f = build_F(engine, slots, t_order, weight_cap);
  const TruncatedSeries g = build_G(engine, slots, t_order, weight_cap);
  const TruncatedSeries f_neg = f.flip_s();
  const TruncatedSeries g_neg = g.flip_s();

  const Rational two(2);
  const TruncatedSeries f3 = f.d_dt(3);
  const TruncatedSeries g2 = g.d_dt(2);

  const TruncatedSeries eq1_lhs = f3.multiply(f_neg.d_dt(2)).scale(two);
  const TruncatedSeries eq1_rhs = g2.multiply(g_neg.d_dt(1)).scale(two);
  compare_sides(eq1_lhs, eq1_rhs, report.t_window, report.eq1_mismatches);

  const TruncatedSeries eq2_lhs = g2.multiply(g_neg).scale(two);
  const TruncatedSeries eq2_rhs =
      f3.multiply(f_neg.d_dt(1)).scale(two).subtract(g2);
  compare_sides(eq2_lhs, eq2_rhs, report.t_window, report.eq2_mismatches);

  return report;
}

}  // namespace hodgerec
