#include "nestrad/fixed_real.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "nestrad/errors.hpp"
#include "nestrad/isqrt.hpp"

namespace nestrad {
namespace {

void require_same_scale(const FixedReal& a, const FixedReal& b, const char* op) {
  if (a.scale_bits() != b.scale_bits()) {
    throw UsageError(std::string("FixedReal ") + op + ": scale mismatch (" +
                     std::to_string(a.scale_bits()) + " vs " +
                     std::to_string(b.scale_bits()) + " bits)");
  }
}

mpz_class shifted(const mpz_class& v, long e) {
  mpz_class out;
  if (e >= 0) {
    mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_tdiv_q_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

mpz_class pow10(int digits) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return out;
}

}  // namespace

FixedReal::FixedReal(mpz_class mantissa, int scale_bits)
    : mantissa_(std::move(mantissa)), scale_bits_(scale_bits) {
  if (scale_bits < 0) throw UsageError("FixedReal: negative scale_bits");
}

FixedReal FixedReal::from_int(long value, int scale_bits) {
  return FixedReal(shifted(mpz_class(value), scale_bits), scale_bits);
}

FixedReal FixedReal::from_integer(const mpz_class& value, int scale_bits) {
  return FixedReal(shifted(value, scale_bits), scale_bits);
}

FixedReal FixedReal::from_rational(const mpq_class& value, int scale_bits) {
  mpz_class num = shifted(value.get_num(), scale_bits);
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), value.get_den_mpz_t());
  return FixedReal(std::move(q), scale_bits);
}

FixedReal FixedReal::from_decimal(std::string_view text, int scale_bits) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false;
  bool int_digit = false;
  for (char ch : rest) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) {
        ++frac_digits;
      } else {
        int_digit = true;
      }
    } else {
      throw UsageError("malformed decimal '" + std::string(text) + "'");
    }
  }
  if (!int_digit || (seen_point && frac_digits == 0)) {
    throw UsageError("malformed decimal '" + std::string(text) + "'");
  }
  mpz_class n(digits, 10);
  n = shifted(n, scale_bits);
  mpz_class q;
  mpz_class den = pow10(frac_digits);
  mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
  if (negative) q = -q;
  return FixedReal(std::move(q), scale_bits);
}

FixedReal FixedReal::rescaled(int scale_bits) const {
  return FixedReal(shifted(mantissa_, static_cast<long>(scale_bits) - scale_bits_), scale_bits);
}

FixedReal FixedReal::abs() const { return FixedReal(::abs(mantissa_), scale_bits_); }

FixedReal FixedReal::mul_pow2(long e) const { return FixedReal(shifted(mantissa_, e), scale_bits_); }

FixedReal FixedReal::mul_int(long factor) const { return FixedReal(mantissa_ * factor, scale_bits_); }

FixedReal FixedReal::div_int(long divisor) const {
  if (divisor == 0) throw DomainError("FixedReal: division by zero");
  mpz_class q;
  mpz_class d(divisor);
  mpz_tdiv_q(q.get_mpz_t(), mantissa_.get_mpz_t(), d.get_mpz_t());
  return FixedReal(std::move(q), scale_bits_);
}

std::string FixedReal::to_decimal(int digits) const {
  if (digits < 0) throw UsageError("to_decimal: negative digit count");
  mpz_class m = ::abs(mantissa_);
  mpz_class int_part = shifted(m, -scale_bits_);
  mpz_class frac = m - shifted(int_part, scale_bits_);
  frac *= pow10(digits);
  frac = shifted(frac, -scale_bits_);

  std::string out;
  if (sgn(mantissa_) < 0 && (sgn(int_part) != 0 || sgn(frac) != 0)) out.push_back('-');
  out += int_part.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out.push_back('.');
    out.append(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

mpq_class FixedReal::to_rational() const {
  mpq_class q(mantissa_, shifted(mpz_class(1), scale_bits_));
  q.canonicalize();
  return q;
}

double FixedReal::to_double() const {
  if (is_zero()) return 0.0;
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(exp - scale_bits_));
}

FixedReal FixedReal::operator-() const { return FixedReal(-mantissa_, scale_bits_); }

FixedReal& FixedReal::operator+=(const FixedReal& rhs) {
  require_same_scale(*this, rhs, "add");
  mantissa_ += rhs.mantissa_;
  return *this;
}

FixedReal& FixedReal::operator-=(const FixedReal& rhs) {
  require_same_scale(*this, rhs, "sub");
  mantissa_ -= rhs.mantissa_;
  return *this;
}

FixedReal& FixedReal::operator*=(const FixedReal& rhs) {
  require_same_scale(*this, rhs, "mul");
  mpz_class prod = mantissa_ * rhs.mantissa_;
  mantissa_ = shifted(prod, -scale_bits_);
  return *this;
}

FixedReal& FixedReal::operator/=(const FixedReal& rhs) {
  require_same_scale(*this, rhs, "div");
  if (rhs.is_zero()) throw DomainError("FixedReal: division by zero");
  mpz_class num = shifted(mantissa_, scale_bits_);
  mpz_tdiv_q(mantissa_.get_mpz_t(), num.get_mpz_t(), rhs.mantissa_.get_mpz_t());
  return *this;
}

bool operator==(const FixedReal& a, const FixedReal& b) {
  require_same_scale(a, b, "compare");
  return a.mantissa_ == b.mantissa_;
}

std::strong_ordering operator<=>(const FixedReal& a, const FixedReal& b) {
  require_same_scale(a, b, "compare");
  int c = cmp(a.mantissa_, b.mantissa_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

FixedReal fixed_sqrt(const FixedReal& x) {
  if (x.sign() < 0) throw DomainError("fixed_sqrt: negative argument " + x.to_decimal(8));
  return FixedReal(isqrt(shifted(x.mantissa(), x.scale_bits())), x.scale_bits());
}

int decimal_digits_for_bits(int bits) {
  // 0.30102999566 < log10(2); floor stays on the safe side.
  int d = static_cast<int>(std::floor(bits * 0.30102999566398119521)) - 2;
  return d < 0 ? 0 : d;
}

}  // namespace nestrad

namespace nestrad {

FixedReal sqrt_of_rational(const mpq_class& r, int bits) {
  if (sgn(r) < 0) throw DomainError("sqrt_of_rational: negative argument");
  FixedReal wide = FixedReal::from_rational(r, 2 * bits);
  return FixedReal(isqrt(wide.mantissa()), bits);
}

}  // namespace nestrad
