#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "nestrad/fixed_real.hpp"

namespace nestrad {

// Exact value 2^p * m^q with rational exponents p, q and rational base m > 0.
//
// The radicand scale function f(k) lives here so that its algebraic
// identities can be checked as rational equalities before any rounding.
class PowerForm {
 public:
  PowerForm(mpq_class p, mpq_class q, mpq_class base);

  const mpq_class& p() const { return p_; }
  const mpq_class& q() const { return q_; }
  const mpq_class& base() const { return base_; }

  PowerForm squared() const;
  // 2^e * (this), exact.
  PowerForm times_pow2(const mpq_class& e) const;

  // The value as a rational when it is one: base a power of two with an
  // integral total exponent, or both exponents integral.
  std::optional<mpq_class> exact_value() const;

  // Numerical value at `bits`; exponents must have power-of-two
  // denominators (UsageError otherwise).
  FixedReal evaluate(int bits) const;

  // Exact value as "2", "3/2"..., or the symbolic form "2^(p)*m^(q)".
  std::string to_string() const;

  friend bool operator==(const PowerForm& a, const PowerForm& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.base_ == b.base_;
  }

 private:
  mpq_class p_;
  mpq_class q_;
  mpq_class base_;
};

// f(k) = 2^((2^(k-2) - 1) / 2^(k-2)) * m^(1 / 2^(k-2)), k >= 2.
// f(2) = m, f(k+1)^2 = 2 f(k), and f(k) -> 2.
PowerForm f_power_form(int k, const mpq_class& m);

}  // namespace nestrad
