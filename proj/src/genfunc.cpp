#include "fibdense/genfunc.hpp"

#include "fibdense/sequences.hpp"

namespace fibdense::genfunc {

namespace seq = fibdense::sequences;

namespace {
void trim(std::vector<Rat>& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}
}  // namespace

RationalGF::RationalGF(std::vector<Rat> n, std::vector<Rat> d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.empty() || den[0] == 0)
    throw ZeroLeadingDenominator("RationalGF: den[0] must be nonzero");
  if (den[0] != 1) {
    const Rat lead = den[0];
    for (auto& c : den) c /= lead;
    for (auto& c : num) c /= lead;
  }
  trim(num);
  trim(den);
}

std::vector<Rat> series_coeffs(const RationalGF& gf, unsigned long n_terms) {
  if (n_terms < 1) throw InvalidSpec("series_coeffs: n_terms must be >= 1");
  std::vector<Rat> c;
  c.reserve(n_terms);
  for (unsigned long j = 0; j < n_terms; ++j) {
    Rat v = j < gf.num.size() ? gf.num[j] : Rat(0);
    for (unsigned long i = 1; i < gf.den.size() && i <= j; ++i)
      v -= gf.den[i] * c[j - i];
    c.push_back(std::move(v));  // den[0] == 1 after normalization
  }
  return c;
}

RationalGF lemma22_gf(const Nat& t, const Nat& k) {
  const unsigned long ku = k.get_ui();
  std::vector<Rat> num(ku, Rat(0));
  num[ku - 1] = 1;
  std::vector<Rat> den(ku + 1, Rat(-1));
  den[0] = 1;
  den[1] = -Rat(t);
  return RationalGF(std::move(num), std::move(den));
}

RationalGF kfib_gf(const Nat& k) {
  return RationalGF({Rat(0), Rat(1)}, {Rat(1), -Rat(k), Rat(-1)});
}

RationalGF product_fib_gf(unsigned long lambda) {
  auto c = [lambda](unsigned long j) {
    return Rat(seq::fib(j) * seq::fib(j + lambda));
  };
  // num[j] = sum_i den[i] c[j-i] for the fixed den 1 - 2x - 2x^2 + x^3
  std::vector<Rat> num = {c(0), c(1) - 2 * c(0), c(2) - 2 * c(1) - 2 * c(0)};
  return RationalGF(std::move(num), {Rat(1), Rat(-2), Rat(-2), Rat(1)});
}

bool verify_gf(const RationalGF& gf, const std::function<Rat(unsigned long)>& seqfn,
               unsigned long n_terms) {
  std::vector<Rat> c = series_coeffs(gf, n_terms);
  for (unsigned long j = 0; j < n_terms; ++j)
    if (c[j] != seqfn(j)) return false;
  return true;
}

}  // namespace fibdense::genfunc
