#include "nestrad/seed.hpp"

#include <utility>

#include "nestrad/errors.hpp"

namespace nestrad {

Seed::Seed(mpq_class m, mpq_class s, int sign) : m_(std::move(m)), s_(std::move(s)), sign_(sign) {
  m_.canonicalize();
  s_.canonicalize();
  if (sign_ != 1 && sign_ != -1) throw DomainError("seed: sign must be +1 or -1");
  if (sgn(m_) <= 0) throw DomainError("seed: m must be positive");
  if (sgn(s_) < 0) throw DomainError("seed: s must be non-negative");
  if (s_ > m_ * m_) throw DomainError("seed: s must not exceed m^2 (|x0| <= 1)");
  if (s_ == m_ * m_ && sign_ > 0) {
    throw DomainError("seed: x0 = 1 has zero angle (s = m^2 with positive sign)");
  }
}

Seed Seed::from_m_d(const mpq_class& m, const mpq_class& d) {
  if (sgn(d) <= 0 || d >= m) throw DomainError("seed: requires 0 < d < m");
  return Seed(m, m * m - d * d, 1);
}

Seed Seed::from_x0(const mpq_class& x0) {
  if (x0 < -1 || x0 >= 1) throw DomainError("seed: requires -1 <= x0 < 1");
  return Seed(1, x0 * x0, sgn(x0) < 0 ? -1 : 1);
}

FixedReal Seed::value(int bits) const {
  FixedReal r = sqrt_of_rational(cos_squared(), bits);
  return sign_ < 0 ? -r : r;
}

FixedReal Seed::sine(int bits) const { return sqrt_of_rational(d_squared() / (m_ * m_), bits); }

FixedReal Seed::d(int bits) const { return sqrt_of_rational(d_squared(), bits); }

FixedReal Seed::signed_root_s(int bits) const {
  FixedReal r = sqrt_of_rational(s_, bits);
  return sign_ < 0 ? -r : r;
}

std::string Seed::describe() const {
  return "m=" + m_.get_str() + " s=" + s_.get_str() + " sign=" + (sign_ < 0 ? "-" : "+");
}

}  // namespace nestrad
