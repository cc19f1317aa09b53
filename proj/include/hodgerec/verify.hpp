#pragma once

#include <string>
#include <vector>

#include "hodgerec/engine.hpp"

namespace hodgerec::verify {

struct CheckFailure {
  std::string check;   // what was compared
  std::string detail;  // expected vs got, exact values
};

struct SuiteResult {
  std::string suite;
  int checks_run = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;  // informational findings, not failures
  bool ok() const { return failures.empty(); }
};

// Engine values against every embedded reference-table value.
SuiteResult run_golden(Engine& engine);

// One-lambda closed forms for 0 <= i <= g <= g_max, both kinds, plus the
// Bernoulli closed form for the (g-1, g) values, g = 1..g_max.
SuiteResult run_closed_forms(Engine& engine, int g_max);

// nph values agree with k = 0 for every valid k, g <= g_max, |i| <= weight_max.
SuiteResult run_k_independence(Engine& engine, int g_max, int weight_max);

// Coefficient-exact PDE residuals for slot counts 1..slots_max.
SuiteResult run_pde(Engine& engine, int t_order, int weight_cap, int slots_max);

// Signed binomial convolution identity for all 0 <= k <= n <= n_max.
SuiteResult run_identity(int n_max);

// Extraction reproduces the normalized values at the two genera beyond the
// interpolation range, for every index of weight <= weight_max; degree
// conjecture mismatches are reported as notes.
SuiteResult run_polynomial_extrapolation(Engine& engine, int weight_max);

}  // namespace hodgerec::verify
