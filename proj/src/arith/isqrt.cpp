#include "nestrad/isqrt.hpp"

#include "nestrad/errors.hpp"

namespace nestrad {

mpz_class isqrt(const mpz_class& n) {
  if (sgn(n) < 0) throw DomainError("isqrt: negative argument");
  if (sgn(n) == 0) return 0;

  // 2^ceil(bits/2) >= sqrt(n); Newton decreases monotonically from above.
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  mpz_class x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  mpz_class y;
  for (;;) {
    mpz_fdiv_q(y.get_mpz_t(), n.get_mpz_t(), x.get_mpz_t());
    y += x;
    y >>= 1;
    if (y >= x) return x;
    x.swap(y);
  }
}

}  // namespace nestrad
