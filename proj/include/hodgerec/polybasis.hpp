#pragma once

#include <vector>

#include "hodgerec/engine.hpp"
#include "hodgerec/rational.hpp"

namespace hodgerec {

// The normalized integral 2^{|i|+1} * value as an integer-valued polynomial
// in the genus, over the basis C(g,0), C(g,1), ..., C(g,|i|^2+1). Trailing
// zero coefficients are kept in storage; observed_degree reports the largest
// k with c_k != 0.
struct BinomialPolynomial {
  Kind kind = Kind::TwistedD;
  MultiIndex index;
  std::vector<Int> coeffs;  // c_k, k = 0 .. |i|^2+1
  int scale_exp = 1;        // |i| + 1
  int first_nonzero = -1;   // smallest g with a nonzero value; -1 if none seen

  int degree_bound() const { return static_cast<int>(coeffs.size()) - 1; }
  int observed_degree() const;
};

// Fits the coefficients from the engine values at g = 0..|i|^2+1 via
//   c_0 = value(0),   c_k = value(k) - sum_{j<k} c_j C(k,j).
// Throws consistency_error if any normalized value fails integrality.
BinomialPolynomial extract(Engine& engine, Kind kind, const MultiIndex& index);

// sum_k c_k C(g,k).
Int evaluate(const BinomialPolynomial& p, int g);

struct DegreeReport {
  int observed = -1;
  int bound = 0;
  bool conjectured_degree_match = false;  // observed == 2|i|
};

DegreeReport degree_report(const BinomialPolynomial& p);

}  // namespace hodgerec
