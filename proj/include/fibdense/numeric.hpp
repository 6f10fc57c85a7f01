#pragma once

#include <gmpxx.h>

#include <string>

namespace fibdense {

/// Arbitrary-precision nonnegative integer. All counts live here.
using Nat = mpz_class;
/// Exact rational, kept canonical (lowest terms, positive denominator).
using Rat = mpq_class;

inline Nat binomial(unsigned long n, unsigned long k) {
  Nat r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Nat nat_pow(const Nat& base, unsigned long e) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat make_rat(const Nat& num, const Nat& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Renders an exact rational with a fixed number of decimals.
/// Ties round away from zero, which is what the paper's tables use
/// (0.625 -> "0.63", 4.25 -> "4.3").
std::string decimal_string(const Rat& v, int decimals);

}  // namespace fibdense
