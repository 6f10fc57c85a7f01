#pragma once

#include <vector>

#include "fibdense/bigfloat.hpp"
#include "fibdense/errors.hpp"
#include "fibdense/numeric.hpp"

namespace fibdense::density {

/// Exact zero/one densities of FW(k).
struct DensityRecord {
  unsigned long k = 0;
  Nat m;     // zeros
  Nat n;     // ones
  Rat df_m;  // m / (m+n)
  Rat df_n;  // n / (m+n)
};

/// One row of the length-ratio table (Table 3 layout).
struct RatioRow {
  unsigned long k = 0;
  Rat l1;  // fib(k+1)/fib(k)
  Rat l2;  // fib(k)/fib(k+1)
  Rat l3;  // fib(k+2)/fib(k)
  Rat l4;  // l1 - l2
  Rat l5;  // l3 - l2
  Rat l6;  // l3 - l1
  Rat l7;  // fib(k+4)/fib(k+1), the column the paper tabulates
};

/// An exact inequality comparison lhs < rhs.
struct BoundReport {
  unsigned long k = 0;
  Rat lhs;
  Rat rhs;
  bool holds = false;
};

DensityRecord density_record(unsigned long k);
std::vector<DensityRecord> density_table(unsigned long k_max);

/// |df_n - (phi-1)| and kappa_k = phi - df_m.
struct Prop31Deviation {
  BigFloat dev_n;
  BigFloat kappa_k;
};
Prop31Deviation prop31_deviation(unsigned long k, mpfr_prec_t prec);

/// Exact evaluation of the Proposition 3.2 display. Reports, never asserts:
/// the lhs exceeds 1 for every k >= 4 (see the claims report).
struct Prop32Eval {
  Rat lhs;       // df_m*floor(2m/n) + df_n*ceil(2n/m)
  Rat eq10_mid;  // 2m(floor(2m/n)+ceil(2n/m)) / (m+n)^2
  bool holds_lt1 = false;
};
Prop32Eval prop32_eval(unsigned long k);

/// A(k)/A(k-1) = fib(k+1)(fib(k+1)-1) / (fib(k-1)(fib(k)-1)), and its
/// signed distance from phi^3.
struct Lemma34Ratio {
  Rat ratio;
  BigFloat a_eps;
};
Lemma34Ratio lemma34_ratio(unsigned long k, mpfr_prec_t prec = 128);

/// Zero-density upper bound m/(m+n) < m(m+1)/(n(2m-n+1)), exact.
/// Throws DegenerateDenominator for k in {0,1}.
BoundReport lemma35_bound(unsigned long k);

std::vector<RatioRow> ratio_table(unsigned long k_max);

/// Exact fib(k+lambda)/fib(k).
Rat lambda_ratio(unsigned long k, unsigned long lambda);

/// |{distinct Fibonacci numbers in [1,x]}| / x, exact.
Rat natural_density_fib(const Nat& x);

/// 2*B(k+1)*B(k+lambda)/(k(k+1)) with B the Binet float; checked against
/// the exact integer value to 2^(-prec/2) relative error.
BigFloat product_norm(unsigned long k, unsigned long lambda, mpfr_prec_t prec);

/// True iff c_j = fib(j)fib(j+lambda) satisfies
/// c_j = 2c_{j-1} + 2c_{j-2} - c_{j-3} for 3 <= j < n_terms.
bool product_recurrence_check(unsigned long lambda, unsigned long n_terms);

}  // namespace fibdense::density
