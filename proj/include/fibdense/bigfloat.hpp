#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "fibdense/numeric.hpp"

namespace fibdense {

/// Thin RAII wrapper over an mpfr_t at a fixed bit precision.
/// Binary operations carry the larger precision of the two operands;
/// rounding is always to nearest (even), MPFR's default.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const Nat& v, mpfr_prec_t prec);
  BigFloat(const Rat& v, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
  BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat log() const;  // requires a positive argument
  BigFloat exp() const;
  BigFloat pow_ui(unsigned long e) const;
  /// Rounds to a new precision.
  BigFloat round_to(mpfr_prec_t prec) const;

  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int decimals) const;

  /// Nearest integer; |*this - result| is written to dist when given.
  Nat nearest_integer(BigFloat* dist = nullptr) const;

  /// 2^e at this value's precision scale (helper for tolerance checks).
  static BigFloat pow2(long e, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);
  static BigFloat sqrt5(mpfr_prec_t prec);
  /// Golden ratio (1+sqrt 5)/2.
  static BigFloat phi(mpfr_prec_t prec);

 private:
  mpfr_t v_;
};

/// Complex value over BigFloat; only the operations the zeta series needs.
struct BigComplex {
  BigFloat re, im;

  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
  BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
  BigComplex operator*(const BigComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  BigComplex operator*(const BigFloat& s) const { return {re * s, im * s}; }
  BigComplex operator/(const BigFloat& s) const { return {re / s, im / s}; }
};

}  // namespace fibdense
