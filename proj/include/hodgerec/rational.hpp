#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hodgerec {

// Arbitrary-precision integer and exact rational. mpq_class values are kept
// canonical (reduced, positive denominator); every constructor below
// canonicalizes.
using Int = mpz_class;
using Rational = mpq_class;

// Thrown when a value contradicts an invariant the theory guarantees
// (non-integral normalization, conflicting cache record, ...). Distinct from
// std::invalid_argument, which signals a caller-side precondition violation.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// C(n, k) with C(n, k) = 0 whenever k < 0, n < 0 or k > n.
inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int pow2(long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Rational make_rational(Int num, Int den) {
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

// "27/8", "-1/2", "3" (denominator 1 omitted).
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hodgerec
