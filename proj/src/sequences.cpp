#include "fibdense/sequences.hpp"

#include <cmath>

namespace fibdense::sequences {

Nat fib(unsigned long n) {
  Nat a = 0, b = 1;
  for (unsigned long i = 0; i < n; ++i) {
    Nat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

std::vector<Nat> fib_upto(unsigned long n) {
  std::vector<Nat> f;
  f.reserve(n + 1);
  f.emplace_back(0);
  if (n >= 1) f.emplace_back(1);
  for (unsigned long i = 2; i <= n; ++i) f.push_back(f[i - 1] + f[i - 2]);
  return f;
}

BigFloat binet_value(unsigned long n, mpfr_prec_t prec) {
  BigFloat s5 = BigFloat::sqrt5(prec);
  BigFloat one(1, prec);
  BigFloat half(1, prec);
  mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
  BigFloat phi = (one + s5) * half;
  BigFloat psi = (one - s5) * half;
  return (phi.pow_ui(n) - psi.pow_ui(n)) / s5;
}

Nat fib_binet(unsigned long n, mpfr_prec_t prec) {
  if (prec < 64) throw PrecisionTooLow("fib_binet: prec must be >= 64");
  BigFloat v = binet_value(n, prec);
  BigFloat dist(prec);
  Nat z = v.nearest_integer(&dist);
  BigFloat quarter(1, prec);
  mpfr_set_d(quarter.raw(), 0.25, MPFR_RNDN);
  if (!(dist < quarter))
    throw PrecisionTooLow("fib_binet: value not within 1/4 of an integer");
  return z;
}

Nat k_fib(const Nat& k, unsigned long n) {
  Nat a = 0, b = 1;
  for (unsigned long i = 0; i < n; ++i) {
    Nat next = k * b + a;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

Nat comb_formula1(const Nat& k, unsigned long n) {
  const Nat disc = k * k + 4;
  Nat total = 0;
  for (unsigned long i = 0; 2 * i + 1 <= n; ++i) {
    total += binomial(n, 2 * i + 1) * nat_pow(k, n - 1 - 2 * i) * nat_pow(disc, i);
  }
  if (!mpz_divisible_2exp_p(total.get_mpz_t(), n - 1))
    throw NonIntegralResult("comb_formula1: 2^(n-1) does not divide the sum");
  Nat r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), total.get_mpz_t(), n - 1);
  return r;
}

Nat comb_formula2(const Nat& k, unsigned long n) {
  Nat total = 0;
  for (unsigned long i = 0; 2 * i <= n - 1; ++i) {
    total += binomial(n - 1 - i, i) * nat_pow(k, n - 1 - 2 * i);
  }
  return total;
}

namespace {
void check_spec(const SeqSpec& spec) {
  if (spec.t < 1 || spec.k < 1 || spec.p < 1)
    throw InvalidSpec("gen_tk_fib: t, k, p must all be >= 1");
  if (spec.p > spec.k) throw InvalidSpec("gen_tk_fib: p must not exceed k");
}
}  // namespace

std::vector<Nat> gen_tk_fib_seq(const SeqSpec& spec, unsigned long count) {
  check_spec(spec);
  const unsigned long k = spec.k.get_ui();
  const unsigned long p = spec.p.get_ui();
  const unsigned long seed = k + p - 2;  // single 1 here, zeros before
  std::vector<Nat> f;
  f.reserve(count);
  for (unsigned long n = 0; n < count; ++n) {
    if (n < seed) {
      f.emplace_back(0);
    } else if (n == seed) {
      f.emplace_back(1);
    } else {
      Nat v = spec.t * f[n - 1];
      for (unsigned long lag = p + 1; lag <= k + p - 1; ++lag)
        if (n >= lag) v += f[n - lag];
      f.push_back(std::move(v));
    }
  }
  return f;
}

Nat gen_tk_fib(const SeqSpec& spec, unsigned long n) {
  return gen_tk_fib_seq(spec, n + 1).back();
}

Rat fib_poly(unsigned long n, const Rat& x) {
  Rat a = 0, b = 1;
  for (unsigned long i = 0; i < n; ++i) {
    Rat next = x * b + a;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

Rat fib_poly_coeff(unsigned long n, const Rat& x) {
  Rat a = 1, b = 1;  // P0, P1
  for (unsigned long i = 0; i < n; ++i) {
    Rat next = b + x * a;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

bool prop44_check(const Nat& k, unsigned long n) {
  Rat inv_k2 = make_rat(Nat(1), k * k);
  Rat rhs = Rat(nat_pow(k, n - 1)) * fib_poly_coeff(n - 1, inv_k2);
  return Rat(comb_formula2(k, n)) == rhs;
}

unsigned long zeta_default_terms(unsigned long n) {
  // |n Log phi2| = n sqrt(ln^2(1/phi) + pi^2) ~ 3.178 n; four times that
  // plus a margin puts the tail below 1e-100 for n <= 30.
  return static_cast<unsigned long>(std::ceil(4.0 * 3.1779 * n)) + 60;
}

BigFloat zeta_partial(unsigned long n, unsigned long terms, mpfr_prec_t prec) {
  if (terms < 1) throw InvalidSpec("zeta_partial: terms must be >= 1");
  if (prec < 128) throw PrecisionTooLow("zeta_partial: prec must be >= 128");

  // The summand peaks near e^{|n Log phi2|}; those bits cancel in the tail,
  // so the working precision carries ~4.6n extra bits and the result is
  // rounded back down at the end.
  const mpfr_prec_t work = prec + static_cast<mpfr_prec_t>(4.6 * n) + 64;

  BigFloat s5 = BigFloat::sqrt5(work);
  BigFloat one(1, work), zero(0, work);
  BigFloat half(0, work);
  mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
  BigFloat phi1 = (one + s5) * half;
  BigFloat abs_phi2 = (s5 - one) * half;  // phi2 = -(sqrt5-1)/2

  BigFloat nf(static_cast<long>(n), work);
  // z1 = n Log(phi1), z2 = n Log(phi2) with the principal branch.
  BigComplex z1(nf * phi1.log(), zero);
  BigComplex z2(nf * abs_phi2.log(), nf * BigFloat::pi(work));

  BigComplex t1(one, zero), t2(one, zero);  // z^v / v!
  BigComplex sum(zero, zero);
  for (unsigned long v = 0; v + 1 < terms; ++v) {
    BigFloat inv(0, work);
    mpfr_set_ui(inv.raw(), v + 1, MPFR_RNDN);
    inv = one / inv;
    t1 = t1 * z1 * inv;
    t2 = t2 * z2 * inv;
    sum = sum + (t1 - t2) / s5;
  }
  // (the v=0 term vanishes: Log^0 phi1 = Log^0 phi2)

  BigFloat bound = BigFloat::pow2(-static_cast<long>(prec / 2), work);
  if (!(sum.im.abs() < bound))
    throw ImaginaryResidue("zeta_partial: imaginary residue above 2^(-prec/2)");
  return sum.re.round_to(prec);
}

}  // namespace fibdense::sequences
