#pragma once

#include "painleve/gauss_rational.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace painleve {

/// Owning MPFR value. Precision travels with the value; results take the
/// larger precision of their operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 256);
  BigFloat(long value, mpfr_prec_t precision);
  BigFloat(double value, mpfr_prec_t precision);
  BigFloat(const mpq_class& value, mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// 2^exponent.
  static BigFloat exp2(long exponent, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer.
  mpz_class round() const;
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat max(const BigFloat& a, const BigFloat& b);

struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t precision = 256) : re(precision), im(precision) {}
  BigComplex(BigFloat re_part, BigFloat im_part) : re(std::move(re_part)), im(std::move(im_part)) {}
  BigComplex(const GaussRational& value, mpfr_prec_t precision)
      : re(value.re(), precision), im(value.im(), precision) {}

  mpfr_prec_t precision() const { return re.precision(); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
};

BigFloat abs(const BigComplex& z);

/// Complex disc: the true value lies within `radius` of `mid`.
struct Ball {
  BigComplex mid;
  BigFloat radius;

  bool contains_zero() const { return abs(mid) <= radius; }
};

Ball operator+(const Ball& a, const Ball& b);
Ball inverse(const Ball& a);  // requires !a.contains_zero()

}  // namespace painleve
