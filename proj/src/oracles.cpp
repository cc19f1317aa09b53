#include "hodgerec/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hodgerec::oracles {

Int elementary_symmetric(int i, const std::vector<long>& values) {
  if (i < 0) throw std::invalid_argument("elementary_symmetric: i < 0");
  if (i > static_cast<int>(values.size())) return 0;
  // e[j] after processing v: e_j of the values seen so far
  std::vector<Int> e(static_cast<std::size_t>(i) + 1, 0);
  e[0] = 1;
  for (long v : values) {
    for (int j = i; j >= 1; --j)
      e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j) - 1];
  }
  return e[static_cast<std::size_t>(i)];
}

Rational one_lambda_closed_form(Kind kind, int g, int i) {
  if (g < 0 || i < 0)
    throw std::invalid_argument("one_lambda_closed_form: negative argument");
  std::vector<long> values;
  values.reserve(static_cast<std::size_t>(g));
  for (int j = 1; j <= g; ++j)
    values.push_back(kind == Kind::TwistedD ? 2 * j - 1 : 2 * j);
  return make_rational(elementary_symmetric(i, values), pow2(i + 1));
}

BernoulliTable::BernoulliTable(int n_max) {
  if (n_max < 0) throw std::invalid_argument("BernoulliTable: n_max < 0");
  table_.reserve(static_cast<std::size_t>(n_max) + 1);
  table_.emplace_back(1);
  for (int n = 1; n <= n_max; ++n) {
    // sum_{k=0}^{n} C(n+1,k) B_k = 0  =>  B_n
    Rational acc = 0;
    for (int k = 0; k < n; ++k)
      acc += Rational(binomial(n + 1, k)) * table_[static_cast<std::size_t>(k)];
    table_.push_back(-acc / Rational(binomial(n + 1, n)));
  }
}

const Rational& BernoulliTable::at(int n) const {
  if (n < 0 || n > max_index())
    throw std::invalid_argument("BernoulliTable: index out of range");
  return table_[static_cast<std::size_t>(n)];
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: n < 0");
  return BernoulliTable(n).at(n);
}

Rational faber_pandharipande(int g) {
  if (g < 1) throw std::invalid_argument("faber_pandharipande: g < 1");
  Rational b = bernoulli(2 * g);
  if (b < 0) b = -b;
  return make_rational(pow2(2 * g) - 1, Int(2 * g)) * b;
}

Int alternating_permutation_count_bruteforce(int n) {
  if (n < 1) throw std::invalid_argument("alternating count: n < 1");
  if (n > 10)
    throw std::invalid_argument("brute-force alternating count capped at n = 10");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Int count = 0;
  do {
    bool ok = true;
    for (int j = 0; j + 1 < n && ok; ++j) {
      if (j % 2 == 0)
        ok = perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(j) + 1];
      else
        ok = perm[static_cast<std::size_t>(j)] > perm[static_cast<std::size_t>(j) + 1];
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Int alternating_permutation_count_entringer(int n) {
  if (n < 1) throw std::invalid_argument("alternating count: n < 1");
  // boustrophedon transform: row[k] = T(n,k), count = T(n,n)
  std::vector<Int> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Int> next(static_cast<std::size_t>(m) + 1);
    next[0] = 0;
    for (int k = 1; k <= m; ++k)
      next[static_cast<std::size_t>(k)] =
          next[static_cast<std::size_t>(k) - 1] + row[static_cast<std::size_t>(m - k)];
    row = std::move(next);
  }
  return row.back();
}

Int alternating_permutation_count(int n) {
  return n <= 10 ? alternating_permutation_count_bruteforce(n)
                 : alternating_permutation_count_entringer(n);
}

Int signed_binomial_convolution(int n, int k) {
  if (k < 0 || k > n)
    throw std::invalid_argument("signed_binomial_convolution: need 0 <= k <= n");
  const int target = 2 * (n - k);
  Int sum = 0;
  for (int l = 0; l <= n; ++l) {
    const int m = target - l;
    if (m < 0 || m > n) continue;
    Int t = binomial(n, l) * binomial(n, m);
    if (l % 2 != 0) sum -= t; else sum += t;
  }
  return sum;
}

bool combinatorial_identity_check(int n, int k) {
  Int lhs = signed_binomial_convolution(n, k);
  if (n % 2 != 0) lhs = -lhs;  // convert literal sign (-1)^l to (-1)^{n-l}
  Int rhs = binomial(n, k);
  if (k % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace hodgerec::oracles
