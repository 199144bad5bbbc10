#include "vdim/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace vdim {

namespace {

long checked_precision(long bits) {
  if (bits < kMinPrecisionBits)
    throw Error("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits, got " +
                std::to_string(bits));
  return bits;
}

}  // namespace

BigReal::BigReal(long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, long precision_bits) : BigReal(precision_bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, long precision_bits) : BigReal(precision_bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, long precision_bits) : BigReal(precision_bits) {
  mpq_class q(mpz_class(static_cast<long>(value.numerator())),
              mpz_class(static_cast<long>(value.denominator())));
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::pi(long precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(const char* decimal, long precision_bits) {
  BigReal r(precision_bits);
  if (mpfr_set_str(r.value_, decimal, 10, MPFR_RNDN) != 0)
    throw Error(std::string("invalid decimal literal: ") + decimal);
  return r;
}

void BigReal::raise_precision(long bits) {
  if (bits > precision_bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  raise_precision(rhs.precision_bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  raise_precision(rhs.precision_bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  raise_precision(rhs.precision_bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  raise_precision(rhs.precision_bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal BigReal::mul_2exp(long exponent) const {
  BigReal r(*this);
  mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow(unsigned long exponent) const {
  BigReal r(precision_bits());
  mpfr_pow_ui(r.value_, value_, exponent, MPFR_RNDN);
  return r;
}

BigReal BigReal::abs() const {
  BigReal r(precision_bits());
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::sin() const {
  BigReal r(precision_bits());
  mpfr_sin(r.value_, value_, MPFR_RNDN);
  return r;
}

mpz_class BigReal::round_to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
  return z;
}

std::string BigReal::to_sci_string(int digits) const {
  const int len = mpfr_snprintf(nullptr, 0, "%.*Re", digits, value_);
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits, value_);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal four_sin_squared_pi(const Rational& x, long precision_bits) {
  // sin^2(pi x) has period 1 in x.
  const auto den = x.denominator();
  auto num = x.numerator() % den;
  if (num < 0) num += den;
  BigReal angle = BigReal::pi(precision_bits) * BigReal(Rational(num, den), precision_bits);
  BigReal s = angle.sin();
  return (s * s).mul_2exp(2);
}

BigReal integrality_tolerance(const mpz_class& value, long precision_bits) {
  BigReal relative = BigReal(mpz_class(abs(value)), precision_bits) / BigReal(1000000000L, precision_bits);
  const BigReal floor_tol = BigReal::parse("1e-30", precision_bits);
  const BigReal cap = BigReal::parse("0.4", precision_bits);
  BigReal tol = max(relative, floor_tol);
  return tol < cap ? tol : cap;
}

IntegerCertificate certify_integer(const BigReal& raw) {
  const long bits = raw.precision_bits();
  mpz_class value = raw.round_to_integer();
  BigReal residual = (raw - BigReal(value, bits)).abs();
  BigReal tol = integrality_tolerance(value, bits);
  const bool ok = residual < tol;
  return {std::move(value), std::move(residual), std::move(tol), ok};
}

}  // namespace vdim
