#pragma once

#include "nestrad/fixed_real.hpp"
#include "nestrad/precision.hpp"

namespace nestrad {

// Reference values computed without any half-angle recursion. They exist to
// measure errors and to supply the 2*pi numerator of self-consistent angle
// ratios; none of the approximation methods under test call them internally
// for the quantity they approximate.

// pi to within 2^(-bits+4), from Machin's 16 atan(1/5) - 4 atan(1/239) summed
// over scaled integers.
FixedReal pi_oracle(int bits);
inline FixedReal pi_oracle(const PrecisionContext& ctx) { return pi_oracle(ctx.working_bits()); }

// atan(t) for any real t, from Euler's series t/(1+t^2) * sum (2n)!!/(2n+1)!! z^n
// with z = t^2/(1+t^2) <= 1/2 after folding |t| > 1 through pi/2 - atan(1/t).
FixedReal arctan_oracle(const FixedReal& t, int bits);

// arccos(x) within 2^(-bits+8). DomainError for |x| > 1.
FixedReal arccos_oracle(const FixedReal& x, int bits);
inline FixedReal arccos_oracle(const FixedReal& x, const PrecisionContext& ctx) {
  return arccos_oracle(x, ctx.working_bits());
}

}  // namespace nestrad
