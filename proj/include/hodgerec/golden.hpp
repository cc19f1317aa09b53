#pragma once

#include <string>
#include <vector>

#include "hodgerec/engine.hpp"
#include "hodgerec/rational.hpp"

namespace hodgerec::golden {

// One reference value of an integral, transcribed literally from the source
// table named in `source`.
struct GoldenValue {
  IntegralKey key;
  Rational value;
  std::string source;
};

// One reference row of normalized-integral coefficients over the basis
// C(g,k), k = k_min .. k_min + coeffs.size() - 1. `corrected` marks the one
// row whose published coefficients are inconsistent with the value tables
// and were replaced by the fit validated against them.
struct GoldenPolynomial {
  Kind kind = Kind::TwistedD;
  MultiIndex index;
  int k_min = 0;
  std::vector<Int> coeffs;
  std::string source;
  bool corrected = false;
};

// Value tables for g = 1..5: 2, 6, 12, 22 and 42 entries. Integrality of
// 2^{|i|+1} * value is checked when the table is built.
const std::vector<GoldenValue>& reference_values();

// Coefficient tables: 10 single-lambda rows and 18 multi-lambda rows.
const std::vector<GoldenPolynomial>& reference_polynomials();

}  // namespace hodgerec::golden
