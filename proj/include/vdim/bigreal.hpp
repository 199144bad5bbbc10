#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "vdim/rootsys.hpp"

namespace vdim {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kDefaultPrecisionBits = 192;

// Owning MPFR value with an explicit precision. Binary operations produce a
// result at the larger of the two operand precisions.
class BigReal {
 public:
  explicit BigReal(long precision_bits = kDefaultPrecisionBits);
  BigReal(long value, long precision_bits);
  BigReal(const mpz_class& value, long precision_bits);
  BigReal(const Rational& value, long precision_bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal pi(long precision_bits);
  // Decimal literal such as "1e-30", rounded to nearest.
  static BigReal parse(const char* decimal, long precision_bits);

  long precision_bits() const { return static_cast<long>(mpfr_get_prec(value_)); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_); }

  // Multiplies by 2^exponent exactly.
  BigReal mul_2exp(long exponent) const;
  BigReal pow(unsigned long exponent) const;
  BigReal abs() const;
  BigReal sin() const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  mpz_class round_to_integer() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits after the point.
  std::string to_sci_string(int digits = 3) const;

  mpfr_srcptr get() const { return value_; }

 private:
  void raise_precision(long bits);

  mpfr_t value_;
};

BigReal max(const BigReal& a, const BigReal& b);

// 4 sin^2(pi * x) for exact rational x.
BigReal four_sin_squared_pi(const Rational& x, long precision_bits);

// Nearest integer to a raw sum together with its certification status.
struct IntegerCertificate {
  mpz_class value;
  BigReal residual;
  BigReal tolerance;
  bool certified = false;
};

// Tolerance is max(1e-9 |value|, 1e-30), capped strictly below 0.4.
BigReal integrality_tolerance(const mpz_class& value, long precision_bits);
IntegerCertificate certify_integer(const BigReal& raw);

}  // namespace vdim
