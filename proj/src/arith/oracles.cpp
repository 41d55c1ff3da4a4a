#include "nestrad/oracles.hpp"

#include "nestrad/errors.hpp"

namespace nestrad {
namespace {

constexpr int kOracleGuard = 32;

// atan(1/x) * 2^bits, truncated series over integers.
mpz_class arctan_inverse_scaled(unsigned long x, int bits) {
  mpz_class term = 1;
  term <<= bits;
  term /= x;
  const unsigned long x2 = x * x;
  mpz_class sum = term;
  for (unsigned long j = 1; sgn(term) != 0; ++j) {
    term /= x2;
    mpz_class piece = term / (2 * j + 1);
    if (j % 2 == 1) {
      sum -= piece;
    } else {
      sum += piece;
    }
  }
  return sum;
}

// Euler series; requires 0 <= t <= 1 at scale `bits`.
FixedReal arctan_euler(const FixedReal& t, int bits) {
  const FixedReal one = FixedReal::from_int(1, bits);
  const FixedReal denom = one + t * t;
  const FixedReal z = (t * t) / denom;
  FixedReal term = t / denom;
  FixedReal sum = term;
  for (long n = 1; !term.is_zero(); ++n) {
    term = (term * z).mul_int(2 * n).div_int(2 * n + 1);
    sum += term;
  }
  return sum;
}

}  // namespace

FixedReal pi_oracle(int bits) {
  const int work = bits + kOracleGuard;
  mpz_class pi = 16 * arctan_inverse_scaled(5, work) - 4 * arctan_inverse_scaled(239, work);
  return FixedReal(std::move(pi), work).rescaled(bits);
}

FixedReal arctan_oracle(const FixedReal& t, int bits) {
  const int work = bits + kOracleGuard;
  FixedReal a = t.rescaled(work).abs();
  const FixedReal one = FixedReal::from_int(1, work);
  FixedReal result;
  if (a <= one) {
    result = arctan_euler(a, work);
  } else {
    result = pi_oracle(work).mul_pow2(-1) - arctan_euler(one / a, work);
  }
  if (t.sign() < 0) result = -result;
  return result.rescaled(bits);
}

FixedReal arccos_oracle(const FixedReal& x, int bits) {
  const int work = bits + kOracleGuard;
  const FixedReal xs = x.rescaled(work);
  const FixedReal one = FixedReal::from_int(1, work);
  if (xs.abs() > one) throw DomainError("arccos_oracle: |x| > 1");

  const FixedReal y = fixed_sqrt(one - xs * xs);
  const FixedReal ax = xs.abs();
  FixedReal result;
  if (ax <= y) {
    // |x| <= 1/sqrt(2): the ratio x/y stays within [-1, 1].
    result = pi_oracle(work).mul_pow2(-1) - arctan_oracle(xs / y, work);
  } else if (xs.sign() > 0) {
    result = arctan_oracle(y / ax, work);
  } else {
    result = pi_oracle(work) - arctan_oracle(y / ax, work);
  }
  return result.rescaled(bits);
}

}  // namespace nestrad
