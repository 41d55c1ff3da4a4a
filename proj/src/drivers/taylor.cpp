#include "nestrad/drivers.hpp"
#include "nestrad/errors.hpp"

namespace nestrad {

mpq_class taylor_seed_exact(const mpq_class& m, const mpq_class& d, int terms) {
  if (terms < 1) throw DomainError("taylor_seed: terms must be >= 1");
  if (sgn(m) <= 0 || sgn(d) < 0) throw DomainError("taylor_seed: requires m > 0, d >= 0");
  const mpq_class u = (d * d) / (m * m);
  if (u >= 1) throw DomainError("taylor_seed: requires d < m");

  // binom(1/2, j) = binom(1/2, j-1) * (1/2 - (j-1)) / j
  mpq_class coeff = 1;
  mpq_class power = 1;  // (-u)^j
  mpq_class sum = 1;
  for (int j = 1; j < terms; ++j) {
    coeff *= mpq_class(3 - 2 * j, 2 * j);
    power *= -u;
    sum += coeff * power;
  }
  return sum;
}

FixedReal taylor_seed(const mpq_class& m, const mpq_class& d, int terms, int bits) {
  return FixedReal::from_rational(taylor_seed_exact(m, d, terms), bits);
}

}  // namespace nestrad
