#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nestrad {

// Arbitrary-precision fixed-point real: value = mantissa * 2^(-scale_bits).
//
// Binary operations require both operands at the same scale (UsageError
// otherwise); use rescaled() to move between scales. Multiplication,
// division and every down-scaling truncate toward zero, so each is faithful
// to within one unit of 2^(-scale_bits).
class FixedReal {
 public:
  FixedReal() = default;
  FixedReal(mpz_class mantissa, int scale_bits);

  static FixedReal zero(int scale_bits) { return FixedReal(0, scale_bits); }
  static FixedReal from_int(long value, int scale_bits);
  static FixedReal from_integer(const mpz_class& value, int scale_bits);
  // Truncates toward zero.
  static FixedReal from_rational(const mpq_class& value, int scale_bits);
  // Accepts [+|-]digits[.digits]; extra precision truncates toward zero.
  static FixedReal from_decimal(std::string_view text, int scale_bits);

  const mpz_class& mantissa() const { return mantissa_; }
  int scale_bits() const { return scale_bits_; }

  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return sgn(mantissa_) == 0; }

  FixedReal rescaled(int scale_bits) const;
  FixedReal abs() const;
  // Multiply by 2^e. Exact for e >= 0, truncating toward zero for e < 0.
  FixedReal mul_pow2(long e) const;
  FixedReal mul_int(long factor) const;
  FixedReal div_int(long divisor) const;

  // Plain decimal, truncated toward zero after `digits` fractional digits.
  std::string to_decimal(int digits) const;
  mpq_class to_rational() const;
  double to_double() const;

  FixedReal operator-() const;
  FixedReal& operator+=(const FixedReal& rhs);
  FixedReal& operator-=(const FixedReal& rhs);
  FixedReal& operator*=(const FixedReal& rhs);
  FixedReal& operator/=(const FixedReal& rhs);

  friend FixedReal operator+(FixedReal lhs, const FixedReal& rhs) { return lhs += rhs; }
  friend FixedReal operator-(FixedReal lhs, const FixedReal& rhs) { return lhs -= rhs; }
  friend FixedReal operator*(FixedReal lhs, const FixedReal& rhs) { return lhs *= rhs; }
  friend FixedReal operator/(FixedReal lhs, const FixedReal& rhs) { return lhs /= rhs; }

  friend bool operator==(const FixedReal& a, const FixedReal& b);
  friend std::strong_ordering operator<=>(const FixedReal& a, const FixedReal& b);

 private:
  mpz_class mantissa_ = 0;
  int scale_bits_ = 0;
};

// floor(sqrt(mantissa * 2^B)) at scale B; DomainError for negative input.
FixedReal fixed_sqrt(const FixedReal& x);

// Largest decimal digit count that `bits` fractional bits support with the
// round-trip guarantee: floor(bits * log10 2) - 2, never negative.
int decimal_digits_for_bits(int bits);

}  // namespace nestrad

namespace nestrad {

// floor(sqrt(r) * 2^bits) * 2^(-bits) for rational r >= 0; exact floor,
// unlike fixed_sqrt(from_rational(r, bits)) which truncates twice.
FixedReal sqrt_of_rational(const mpq_class& r, int bits);

}  // namespace nestrad
