#include "hodgerec/polybasis.hpp"

namespace hodgerec {

int BinomialPolynomial::observed_degree() const {
  for (int k = degree_bound(); k >= 0; --k)
    if (coeffs[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

BinomialPolynomial extract(Engine& engine, Kind kind, const MultiIndex& index) {
  BinomialPolynomial p;
  p.kind = kind;
  p.index = index;
  p.scale_exp = index.weight() + 1;
  const int k_max = index.weight() * index.weight() + 1;
  p.coeffs.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    Int c = engine.normalized_integer(kind, k, index);
    if (c != 0 && p.first_nonzero < 0) p.first_nonzero = k;
    for (int j = 0; j < k; ++j)
      c -= p.coeffs[static_cast<std::size_t>(j)] * binomial(k, j);
    p.coeffs.push_back(std::move(c));
  }
  return p;
}

Int evaluate(const BinomialPolynomial& p, int g) {
  Int sum = 0;
  for (int k = 0; k <= p.degree_bound(); ++k)
    sum += p.coeffs[static_cast<std::size_t>(k)] * binomial(g, k);
  return sum;
}

DegreeReport degree_report(const BinomialPolynomial& p) {
  DegreeReport r;
  r.observed = p.observed_degree();
  r.bound = p.degree_bound();
  r.conjectured_degree_match = r.observed == 2 * p.index.weight();
  return r;
}

}  // namespace hodgerec
