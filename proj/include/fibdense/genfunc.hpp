#pragma once

#include <functional>
#include <vector>

#include "fibdense/errors.hpp"
#include "fibdense/numeric.hpp"

namespace fibdense::genfunc {

/// Rational generating function num(x)/den(x), coefficients in ascending
/// powers. Stored normalized: den[0] = 1, trailing zeros trimmed.
struct RationalGF {
  std::vector<Rat> num;
  std::vector<Rat> den;

  RationalGF(std::vector<Rat> n, std::vector<Rat> d);
};

/// First n_terms series coefficients via the recurrence induced by den.
std::vector<Rat> series_coeffs(const RationalGF& gf, unsigned long n_terms);

/// x^(k-1) / (1 - t x - x^2 - ... - x^k), the generalized (t,k)-Fibonacci
/// 1-sequence generating function.
RationalGF lemma22_gf(const Nat& t, const Nat& k);

/// x / (1 - k x - x^2), the k-Fibonacci generating function.
RationalGF kfib_gf(const Nat& k);

/// Generating function of c_j = fib(j) * fib(j+lambda): denominator
/// 1 - 2x - 2x^2 + x^3, numerator fitted to the first three terms
/// (exact and radical-free for each fixed lambda).
RationalGF product_fib_gf(unsigned long lambda);

/// True iff the series equals seq(j) exactly for all j < n_terms.
bool verify_gf(const RationalGF& gf, const std::function<Rat(unsigned long)>& seq,
               unsigned long n_terms);

}  // namespace fibdense::genfunc
