#pragma once

#include <vector>

#include "fibdense/bigfloat.hpp"
#include "fibdense/errors.hpp"
#include "fibdense/numeric.hpp"

namespace fibdense::sequences {

/// Classic Fibonacci numbers, F(0)=0, F(1)=1, iterative.
Nat fib(unsigned long n);

/// F(0)..F(n) in one pass.
std::vector<Nat> fib_upto(unsigned long n);

/// Binet's closed form evaluated in BigFloat and rounded to the nearest
/// integer. Equals fib(n) whenever prec >= n + 64. Throws PrecisionTooLow
/// if the float value lands more than 1/4 away from an integer.
Nat fib_binet(unsigned long n, mpfr_prec_t prec);

/// Binet's expression as a float, without the integer rounding.
BigFloat binet_value(unsigned long n, mpfr_prec_t prec);

/// k-Fibonacci numbers: F(k,0)=0, F(k,1)=1, F(k,n)=k*F(k,n-1)+F(k,n-2).
Nat k_fib(const Nat& k, unsigned long n);

/// First combinatorial closed form for F(k,n): the binomial sum with the
/// (k^2+4)^i factor, divided by 2^(n-1). The division is exact; a failed
/// cancellation throws NonIntegralResult (it would mean a bug, not bad input).
Nat comb_formula1(const Nat& k, unsigned long n);

/// Second combinatorial closed form: sum of C(n-1-i, i) * k^(n-1-2i).
Nat comb_formula2(const Nat& k, unsigned long n);

/// Parameters of the generalized (t,k)-Fibonacci p-sequence.
struct SeqSpec {
  Nat t;
  Nat k;
  Nat p;
};

/// n-th term of the generalized (t,k)-Fibonacci p-sequence. Seed layout:
/// zeros up to index k+p-3, a single 1 at index k+p-2, then
/// F(n) = t*F(n-1) + F(n-p-1) + ... + F(n-(k+p-1)); for p=1 this is the
/// recurrence induced by the x^(k-1)/(1 - t x - x^2 - ... - x^k) generating
/// function. Throws InvalidSpec when p > k or any parameter < 1.
Nat gen_tk_fib(const SeqSpec& spec, unsigned long n);

/// Terms 0..count-1 of the same sequence in one pass.
std::vector<Nat> gen_tk_fib_seq(const SeqSpec& spec, unsigned long count);

/// Fibonacci polynomials F0=0, F1=1, Fn(x) = x*F(n-1)(x) + F(n-2)(x),
/// evaluated exactly. Fn(1) = fib(n).
Rat fib_poly(unsigned long n, const Rat& x);

/// Coefficient-form Fibonacci polynomial: P0=P1=1,
/// Pn(x) = P(n-1)(x) + x*P(n-2)(x), i.e. sum of C(n-i, i) x^i.
/// Satisfies k^(n-1) * P(n-1)(1/k^2) = comb_formula2(k, n).
Rat fib_poly_coeff(unsigned long n, const Rat& x);

/// Exact check of the closed form F2(k,n) = k^(n-1) * P(n-1)(1/k^2).
bool prop44_check(const Nat& k, unsigned long n);

/// Partial sum of the zeta series over Fibonacci logarithms:
///   sum_{v=0}^{terms-1} n^v (Log^v phi1 - Log^v phi2) / ((phi1-phi2) v!)
/// with phi2 = (1-sqrt5)/2 and its principal-branch complex logarithm.
/// Returns the real part at the requested precision; throws ImaginaryResidue
/// if the imaginary part is not below 2^(-prec/2).
BigFloat zeta_partial(unsigned long n, unsigned long terms, mpfr_prec_t prec);

/// Series length that drives the tail below 1e-30 for n <= 30.
unsigned long zeta_default_terms(unsigned long n);

}  // namespace fibdense::sequences
