#pragma once

#include <gmpxx.h>

namespace nestrad {

// Exact floor square root: returns r with r*r <= n < (r+1)*(r+1).
// Integer Newton iteration seeded from the bit length of n.
mpz_class isqrt(const mpz_class& n);

}  // namespace nestrad
