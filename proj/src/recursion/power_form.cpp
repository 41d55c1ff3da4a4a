#include "nestrad/power_form.hpp"

#include <utility>

#include "nestrad/errors.hpp"

namespace nestrad {
namespace {

constexpr int kEvalGuard = 32;
constexpr long kMaxIntegralExponent = 1 << 16;

// log2 of a power of two, or nullopt.
std::optional<long> exact_log2(const mpz_class& v) {
  if (sgn(v) <= 0) return std::nullopt;
  mp_bitcnt_t low = mpz_scan1(v.get_mpz_t(), 0);
  if (mpz_sizeinbase(v.get_mpz_t(), 2) != low + 1) return std::nullopt;
  return static_cast<long>(low);
}

bool is_integral(const mpq_class& v) { return v.get_den() == 1; }

mpq_class rational_pow(const mpq_class& base, long e) {
  if (e > kMaxIntegralExponent || e < -kMaxIntegralExponent) {
    throw UsageError("PowerForm: integral exponent out of range");
  }
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ue);
  mpq_class out = e < 0 ? mpq_class(den, num) : mpq_class(num, den);
  out.canonicalize();
  return out;
}

// base^e at `bits` for dyadic e: integral part exactly, fractional part as a
// product over its binary digits of the repeated square roots of base.
FixedReal pow_dyadic(const mpq_class& base, const mpq_class& e, int bits) {
  auto den_log = exact_log2(e.get_den());
  if (!den_log) throw UsageError("PowerForm: exponent denominator is not a power of two");
  mpz_class floor_e;
  mpz_fdiv_q(floor_e.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
  if (!floor_e.fits_slong_p()) throw UsageError("PowerForm: exponent out of range");
  const mpz_class frac_num = e.get_num() - floor_e * e.get_den();

  FixedReal result = FixedReal::from_rational(rational_pow(base, floor_e.get_si()), bits);
  FixedReal root = FixedReal::from_rational(base, bits);
  const long depth = *den_log;
  for (long i = 1; i <= depth; ++i) {
    root = fixed_sqrt(root);
    if (mpz_tstbit(frac_num.get_mpz_t(), static_cast<mp_bitcnt_t>(depth - i))) result *= root;
  }
  return result;
}

}  // namespace

PowerForm::PowerForm(mpq_class p, mpq_class q, mpq_class base)
    : p_(std::move(p)), q_(std::move(q)), base_(std::move(base)) {
  p_.canonicalize();
  q_.canonicalize();
  base_.canonicalize();
  if (sgn(base_) <= 0) throw DomainError("PowerForm: base must be positive");
}

PowerForm PowerForm::squared() const { return PowerForm(2 * p_, 2 * q_, base_); }

PowerForm PowerForm::times_pow2(const mpq_class& e) const { return PowerForm(p_ + e, q_, base_); }

std::optional<mpq_class> PowerForm::exact_value() const {
  auto num_log = exact_log2(base_.get_num());
  auto den_log = exact_log2(base_.get_den());
  if (num_log && den_log) {
    mpq_class total = p_ + q_ * mpq_class(*num_log - *den_log);
    if (is_integral(total) && total.get_num().fits_slong_p()) {
      return rational_pow(mpq_class(2), total.get_num().get_si());
    }
    return std::nullopt;
  }
  if (is_integral(p_) && is_integral(q_) && p_.get_num().fits_slong_p() &&
      q_.get_num().fits_slong_p()) {
    return rational_pow(mpq_class(2), p_.get_num().get_si()) *
           rational_pow(base_, q_.get_num().get_si());
  }
  return std::nullopt;
}

FixedReal PowerForm::evaluate(int bits) const {
  if (auto exact = exact_value()) return FixedReal::from_rational(*exact, bits);
  const int work = bits + kEvalGuard;
  FixedReal v = pow_dyadic(mpq_class(2), p_, work) * pow_dyadic(base_, q_, work);
  return v.rescaled(bits);
}

std::string PowerForm::to_string() const {
  if (auto exact = exact_value()) return exact->get_str();
  return "2^(" + p_.get_str() + ")*" + base_.get_str() + "^(" + q_.get_str() + ")";
}

PowerForm f_power_form(int k, const mpq_class& m) {
  if (k < 2) throw DomainError("f_power_form: k must be >= 2, got " + std::to_string(k));
  mpz_class scale;
  mpz_setbit(scale.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 2));
  return PowerForm(mpq_class(scale - 1, scale), mpq_class(1, scale), m);
}

}  // namespace nestrad
