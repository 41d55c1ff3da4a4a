#pragma once

#include <string>

#include <gmpxx.h>

#include "nestrad/fixed_real.hpp"

namespace nestrad {

// Starting cosine x0 = sign * sqrt(s) / m of the half-angle recursion.
//
// m > 0 and 0 <= s <= m^2 are exact rationals so that seeds whose angle is a
// rational multiple of pi can be recognized exactly. The negative branch
// carries the inner "2 - sqrt(3)" and "2 - sqrt(2)" terms of the classical
// formulas. x0 = 1 (s = m^2 with sign +1) is rejected: its angle is zero.
class Seed {
 public:
  Seed(mpq_class m, mpq_class s, int sign);

  // s = m^2 - d^2, positive branch; requires 0 < d < m.
  static Seed from_m_d(const mpq_class& m, const mpq_class& d);
  // m = 1, s = x0^2; requires -1 <= x0 < 1.
  static Seed from_x0(const mpq_class& x0);

  const mpq_class& m() const { return m_; }
  const mpq_class& s() const { return s_; }
  int sign() const { return sign_; }

  // s / m^2 = x0^2, exact.
  mpq_class cos_squared() const { return s_ / (m_ * m_); }
  // d^2 = m^2 - s, exact.
  mpq_class d_squared() const { return m_ * m_ - s_; }

  FixedReal value(int bits) const;  // x0
  FixedReal sine(int bits) const;   // sqrt(1 - x0^2) = d / m
  FixedReal d(int bits) const;
  FixedReal signed_root_s(int bits) const;  // sign * sqrt(s), innermost radicand term

  std::string describe() const;

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.m_ == b.m_ && a.s_ == b.s_ && a.sign_ == b.sign_;
  }

 private:
  mpq_class m_;
  mpq_class s_;
  int sign_;
};

}  // namespace nestrad
