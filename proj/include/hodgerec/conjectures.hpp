#pragma once

#include <string>
#include <vector>

#include "hodgerec/engine.hpp"
#include "hodgerec/rational.hpp"

namespace hodgerec::conjectures {

enum class FindingStatus { holds, violated, vacuous };

const char* status_text(FindingStatus s);

// One checked instance of a conjecture. A violated finding always carries
// the exact witness numbers needed to reproduce it.
struct Finding {
  std::string conjecture;  // stable id, e.g. "degree-two-weight"
  std::string instance;    // parameters, e.g. "kind=D index=2,1"
  FindingStatus status = FindingStatus::holds;
  std::string witness;
};

struct LogConcavity {
  FindingStatus status = FindingStatus::holds;
  int violating_k = -1;    // index into the sequence
  std::string detail;
};

// c_k^2 >= c_{k-1} c_{k+1} on the contiguous nonzero support
// (leading/trailing zeros dropped). Interior zeros make the support
// non-contiguous, reported as its own violation. Support shorter than 3 is
// vacuous.
LogConcavity check_log_concavity(const std::vector<Int>& seq);

// sum_{i=0}^{g} (-2)^i * TwistedD value at (g, canonicalize(prefix + [i]));
// zero whenever |prefix| <= g-1.
Rational vanishing_sum(Engine& engine, int g, const MultiIndex& prefix);

// Runs, in deterministic order:
//  (a) observed polynomial degree == 2|i| for every index of weight <=
//      weight_max, both kinds;
//  (b) nonnegativity and log-concavity of the extracted coefficient
//      sequences;
//  (c) vanishing sums for g = 1..g_max and every prefix with |prefix| <= g-1;
//  (d) log-concavity of the appended-entry value sequences
//      {2^{|l|+i+1} value(l, i)}_{i=0..g} for the same (g, prefix) range,
//      both kinds;
//  (e) the alternating-permutation identity 2^{2g} value(g-1, g) = Z_g for
//      g <= min(g_max, 5).
std::vector<Finding> scan(Engine& engine, int g_max, int weight_max);

}  // namespace hodgerec::conjectures
