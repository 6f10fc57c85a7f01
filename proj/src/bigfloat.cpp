#include "fibdense/bigfloat.hpp"

#include <algorithm>

namespace fibdense {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Nat& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log() const {
  BigFloat r(precision());
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(precision());
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_ui(unsigned long e) const {
  BigFloat r(precision());
  mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::round_to(mpfr_prec_t prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int decimals) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rf", decimals, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Nat BigFloat::nearest_integer(BigFloat* dist) const {
  BigFloat rounded(precision());
  mpfr_rint(rounded.v_, v_, MPFR_RNDN);
  Nat z;
  mpfr_get_z(z.get_mpz_t(), rounded.v_, MPFR_RNDN);
  if (dist) *dist = (*this - rounded).abs();
  return z;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt5(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_sqrt_ui(r.v_, 5, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::phi(mpfr_prec_t prec) {
  BigFloat r = sqrt5(prec);
  mpfr_add_ui(r.v_, r.v_, 1, MPFR_RNDN);
  mpfr_div_2ui(r.v_, r.v_, 1, MPFR_RNDN);
  return r;
}

}  // namespace fibdense
