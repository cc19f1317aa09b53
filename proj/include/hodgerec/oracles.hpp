#pragma once

#include <vector>

#include "hodgerec/engine.hpp"
#include "hodgerec/rational.hpp"

namespace hodgerec::oracles {

// e_i of the given values; 1 for i = 0, 0 for i > #values.
Int elementary_symmetric(int i, const std::vector<long>& values);

// Closed form for one-lambda integrals:
//   TwistedD:   (1/2)^{i+1} e_i(1, 3, ..., 2g-1)
//   UntwistedD: (1/2)^{i+1} e_i(2, 4, ..., 2g)
Rational one_lambda_closed_form(Kind kind, int g, int i);

// Exact Bernoulli numbers B_0..B_n via the defining recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0 (B_1 = -1/2 convention). Built once,
// read-only afterwards.
class BernoulliTable {
 public:
  explicit BernoulliTable(int n_max);
  const Rational& at(int n) const;
  int max_index() const { return static_cast<int>(table_.size()) - 1; }

 private:
  std::vector<Rational> table_;
};

Rational bernoulli(int n);

// (2^{2g} - 1) / (2g) * |B_{2g}|, the no-psi two-lambda value at indices
// (g-1, g).
Rational faber_pandharipande(int g);

// Number of up-down alternating permutations of [1..n]: brute force over all
// n! permutations for n <= 10, boustrophedon recurrence above.
Int alternating_permutation_count(int n);
Int alternating_permutation_count_bruteforce(int n);  // n <= 10
Int alternating_permutation_count_entringer(int n);

// Checks sum_{l+m=2(n-k), 0<=l,m<=n} sign(l) C(n,l) C(n,m) = (-1)^k C(n,k),
// with sign(l) = (-1)^{n-l}, i.e. the sum read as the coefficient of
// x^{2(n-k)} in (x-1)^n (x+1)^n. Requires 0 <= k <= n.
bool combinatorial_identity_check(int n, int k);

// The same sum with the literal sign (-1)^l; equals the checked form times
// (-1)^n. Exposed so the sign convention itself can be tested.
Int signed_binomial_convolution(int n, int k);

}  // namespace hodgerec::oracles
