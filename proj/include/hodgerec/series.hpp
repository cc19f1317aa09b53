#pragma once

#include <map>
#include <vector>

#include "hodgerec/engine.hpp"
#include "hodgerec/rational.hpp"

namespace hodgerec {

// Bivariate truncated series: exact coefficients on monomials
// s_1^{e_1} ... s_n^{e_n} t^p with e-weight <= weight_cap and p <= t_order.
// Absent keys mean coefficient 0; zero coefficients are never stored.
// Operations return new values; t_order/weight_cap shrink so that every
// retained coefficient stays exact.
class TruncatedSeries {
 public:
  struct Term {
    std::vector<int> exps;
    int tpow = 0;
    auto operator<=>(const Term&) const = default;
  };
  using CoefficientMap = std::map<Term, Rational>;

  TruncatedSeries(int slots, int t_order, int weight_cap);

  int slots() const { return slots_; }
  int t_order() const { return t_order_; }
  int weight_cap() const { return weight_cap_; }

  const CoefficientMap& coefficients() const { return coeffs_; }
  Rational coefficient(const std::vector<int>& exps, int tpow) const;
  // Drops the assignment when the monomial lies outside the retained window.
  void set_coefficient(const std::vector<int>& exps, int tpow, Rational value);

  // Formal d/dt applied `times` times; t_order decreases by `times`.
  TruncatedSeries d_dt(int times) const;
  // s -> -s: multiplies the coefficient of s^e by (-1)^{|e|}.
  TruncatedSeries flip_s() const;
  // Exact truncated product; operands must agree on the slot count.
  TruncatedSeries multiply(const TruncatedSeries& other) const;
  TruncatedSeries subtract(const TruncatedSeries& other) const;
  TruncatedSeries scale(const Rational& factor) const;

 private:
  int slots_;
  int t_order_;
  int weight_cap_;
  CoefficientMap coeffs_;
};

// Generating functions of the integrals: the coefficient of s^e t^{2g+2} is
// the (twisted for F, untwisted for G) value at (g, canonicalize(e)) divided
// by (2g+2)!.
TruncatedSeries build_F(Engine& engine, int slots, int t_order, int weight_cap);
TruncatedSeries build_G(Engine& engine, int slots, int t_order, int weight_cap);

struct PdeCell {
  std::vector<int> exps;
  int tpow = 0;
  Rational lhs;
  Rational rhs;
};

struct PdeReport {
  int slots = 0;
  int t_order = 0;
  int weight_cap = 0;
  int t_window = 0;  // coefficients compared for tpow <= t_window
  std::vector<PdeCell> eq1_mismatches;
  std::vector<PdeCell> eq2_mismatches;
  bool ok() const { return eq1_mismatches.empty() && eq2_mismatches.empty(); }
};

// Coefficient-exact check of the system
//   2 F'''(s,t) F''(-s,t) = 2 G''(s,t) G'(-s,t)
//   2 G''(s,t) G(-s,t)    = 2 F'''(s,t) F'(-s,t) - G''(s,t)
// on all reliable cells: tpow <= t_order - 3 (unaffected by truncation),
// weight <= weight_cap, and weight < tpow. The last bound keeps the
// comparison on the cells whose coefficient identity carries at least one
// psi-class; cells with weight >= tpow (pure-Hodge coefficients, the
// unstable t^0 cell) are not governed by the system and genuinely differ.
// Requires t_order >= 4.
PdeReport verify_pde(Engine& engine, int slots, int t_order, int weight_cap);

}  // namespace hodgerec
