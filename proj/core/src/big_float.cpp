#include "painleve/big_float.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace painleve {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::exp2(long exponent, mpfr_prec_t precision) {
  BigFloat x(precision);
  mpfr_set_ui_2exp(x.value_, 1, exponent, MPFR_RNDN);
  return x;
}

namespace {

void widen(mpfr_ptr target, mpfr_srcptr operand) {
  if (mpfr_get_prec(operand) > mpfr_get_prec(target)) {
    mpfr_prec_round(target, mpfr_get_prec(operand), MPFR_RNDN);
  }
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(value_, o.value_);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(value_, o.value_);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(value_, o.value_);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(value_, o.value_);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat x = *this;
  mpfr_neg(x.value_, x.value_, MPFR_RNDN);
  return x;
}

mpz_class BigFloat::round() const {
  if (!is_finite()) throw std::domain_error("BigFloat::round on non-finite value");
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
  return z;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_zero_p(value_)) return "0";
  const int needed = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
  std::string out(static_cast<std::size_t>(needed) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Re", digits - 1, value_);
  out.resize(static_cast<std::size_t>(needed));
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat y = x;
  mpfr_abs(y.get(), y.get(), MPFR_RNDN);
  return y;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat y = x;
  mpfr_sqrt(y.get(), y.get(), MPFR_RNDN);
  return y;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDU);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const BigFloat n = o.re * o.re + o.im * o.im;
  BigFloat r = (re * o.re + im * o.im) / n;
  BigFloat i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

namespace {

/// Rounding slack for a value of magnitude `m` computed at the given precision.
BigFloat slack(const BigFloat& m, mpfr_prec_t precision) {
  return m * BigFloat::exp2(-static_cast<long>(precision) + 4, precision);
}

}  // namespace

Ball operator+(const Ball& a, const Ball& b) {
  Ball out{a.mid + b.mid, a.radius + b.radius};
  out.radius += slack(abs(out.mid), out.mid.precision());
  return out;
}

Ball inverse(const Ball& a) {
  const BigFloat m = abs(a.mid);
  if (m <= a.radius) throw std::domain_error("inverse of a ball containing zero");
  const mpfr_prec_t p = a.mid.precision();
  BigComplex one(BigFloat(1L, p), BigFloat(0L, p));
  Ball out{one / a.mid, a.radius / (m * (m - a.radius))};
  out.radius += slack(abs(out.mid), p);
  return out;
}

}  // namespace painleve
