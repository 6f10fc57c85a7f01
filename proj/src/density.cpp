#include "fibdense/density.hpp"

#include "fibdense/fibword.hpp"
#include "fibdense/sequences.hpp"

namespace fibdense::density {

namespace seq = fibdense::sequences;

DensityRecord density_record(unsigned long k) {
  auto [m, n] = fibword::counts(k);
  DensityRecord r;
  r.k = k;
  r.m = m;
  r.n = n;
  const Nat len = m + n;
  r.df_m = make_rat(m, len);
  r.df_n = make_rat(n, len);
  return r;
}

std::vector<DensityRecord> density_table(unsigned long k_max) {
  std::vector<DensityRecord> rows;
  rows.reserve(k_max + 1);
  for (unsigned long k = 0; k <= k_max; ++k) rows.push_back(density_record(k));
  return rows;
}

Prop31Deviation prop31_deviation(unsigned long k, mpfr_prec_t prec) {
  DensityRecord r = density_record(k);
  BigFloat phi = BigFloat::phi(prec);
  BigFloat one(1, prec);
  Prop31Deviation d{(BigFloat(r.df_n, prec) - (phi - one)).abs(),
                    phi - BigFloat(r.df_m, prec)};
  return d;
}

Prop32Eval prop32_eval(unsigned long k) {
  if (k < 4) throw InvalidSpec("prop32_eval: requires k >= 4");
  DensityRecord r = density_record(k);
  Nat fl, ce;
  mpz_fdiv_q(fl.get_mpz_t(), Nat(2 * r.m).get_mpz_t(), r.n.get_mpz_t());
  mpz_cdiv_q(ce.get_mpz_t(), Nat(2 * r.n).get_mpz_t(), r.m.get_mpz_t());
  Prop32Eval e;
  e.lhs = r.df_m * Rat(fl) + r.df_n * Rat(ce);
  const Nat len = r.m + r.n;
  e.eq10_mid = make_rat(2 * r.m * (fl + ce), len * len);
  e.holds_lt1 = e.lhs < 1;
  return e;
}

Lemma34Ratio lemma34_ratio(unsigned long k, mpfr_prec_t prec) {
  if (k < 4) throw InvalidSpec("lemma34_ratio: requires k >= 4");
  const Nat fk1 = seq::fib(k + 1), fk = seq::fib(k), fkm1 = seq::fib(k - 1);
  Lemma34Ratio out{make_rat(fk1 * (fk1 - 1), fkm1 * (fk - 1)), BigFloat(prec)};
  out.a_eps = BigFloat(out.ratio, prec) - BigFloat::phi(prec).pow_ui(3);
  return out;
}

BoundReport lemma35_bound(unsigned long k) {
  auto [m, n] = fibword::counts(k);
  const Nat den_factor = 2 * m - n + 1;
  if (n == 0 || den_factor == 0)
    throw DegenerateDenominator("lemma35_bound: n(2m-n+1) vanishes at k=" +
                                std::to_string(k));
  BoundReport b;
  b.k = k;
  b.lhs = make_rat(m, m + n);
  b.rhs = make_rat(m * (m + 1), n * den_factor);
  b.holds = b.lhs < b.rhs;
  return b;
}

std::vector<RatioRow> ratio_table(unsigned long k_max) {
  std::vector<Nat> f = seq::fib_upto(k_max + 4);
  std::vector<RatioRow> rows;
  rows.reserve(k_max);
  for (unsigned long k = 1; k <= k_max; ++k) {
    RatioRow r;
    r.k = k;
    r.l1 = make_rat(f[k + 1], f[k]);
    r.l2 = make_rat(f[k], f[k + 1]);
    r.l3 = make_rat(f[k + 2], f[k]);
    r.l4 = r.l1 - r.l2;
    r.l5 = r.l3 - r.l2;
    r.l6 = r.l3 - r.l1;
    r.l7 = make_rat(f[k + 4], f[k + 1]);
    rows.push_back(std::move(r));
  }
  return rows;
}

Rat lambda_ratio(unsigned long k, unsigned long lambda) {
  if (k < 1) throw InvalidSpec("lambda_ratio: requires k >= 1");
  return make_rat(seq::fib(k + lambda), seq::fib(k));
}

Rat natural_density_fib(const Nat& x) {
  if (x < 1) throw InvalidSpec("natural_density_fib: requires x >= 1");
  // fib(2), fib(3), ... enumerates each Fibonacci number once (1 included once)
  unsigned long count = 0;
  Nat a = 1, b = 2;  // fib(2), fib(3)
  while (a <= x) {
    ++count;
    Nat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return make_rat(Nat(count), x);
}

BigFloat product_norm(unsigned long k, unsigned long lambda, mpfr_prec_t prec) {
  if (k < 1 || lambda < 1)
    throw InvalidSpec("product_norm: requires k >= 1 and lambda >= 1");
  if (prec < 64) throw PrecisionTooLow("product_norm: prec must be >= 64");
  BigFloat num = BigFloat(2, prec) * seq::binet_value(k + 1, prec) *
                 seq::binet_value(k + lambda, prec);
  BigFloat den(Nat(Nat(k) * Nat(k + 1)), prec);
  BigFloat v = num / den;

  Rat exact = make_rat(2 * seq::fib(k + 1) * seq::fib(k + lambda), Nat(k) * Nat(k + 1));
  BigFloat rel = ((v - BigFloat(exact, prec)) / BigFloat(exact, prec)).abs();
  if (!(rel < BigFloat::pow2(-static_cast<long>(prec / 2), prec)))
    throw PrecisionTooLow("product_norm: Binet evaluation drifted from exact value");
  return v;
}

bool product_recurrence_check(unsigned long lambda, unsigned long n_terms) {
  if (n_terms < 4)
    throw InvalidSpec("product_recurrence_check: requires n_terms >= 4");
  std::vector<Nat> f = seq::fib_upto(n_terms + lambda + 1);
  std::vector<Nat> c(n_terms);
  for (unsigned long j = 0; j < n_terms; ++j) c[j] = f[j] * f[j + lambda];
  for (unsigned long j = 3; j < n_terms; ++j)
    if (c[j] != 2 * c[j - 1] + 2 * c[j - 2] - c[j - 3]) return false;
  return true;
}

}  // namespace fibdense::density
