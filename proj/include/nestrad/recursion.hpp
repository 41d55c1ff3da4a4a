#pragma once

#include <string>
#include <vector>

#include "nestrad/fixed_real.hpp"
#include "nestrad/precision.hpp"
#include "nestrad/seed.hpp"

namespace nestrad {

// States are 0-based: x_0 is the seed, theta0 = arccos(x_0), and state k
// holds x_k = cos(theta0 / 2^k), c_k = sin(theta0 / 2^k).
struct RecursionState {
  int k = 0;
  FixedReal x;      // cosine iterate
  FixedReal c;      // sine iterate
  FixedReal chord;  // 2^k * c_k, the quantity every driver scales
  FixedReal g;      // unnormalized radicand, g_k = x_k * f(k+2)
  FixedReal f;      // f(k+2), so that x = g / f
};

enum class SineVariant { naive, stable };

// sqrt((1 + x_prev) / 2). Inputs within 2^(-B+4) outside [-1, 1] clamp to
// the boundary; anything further out is a DomainError.
FixedReal half_angle_step(const FixedReal& x_prev);

// sqrt((1 - x_prev) / 2). Loses precision as x_prev -> 1; kept to measure that.
FixedReal sine_step_naive(const FixedReal& x_prev);

// c_prev / (2 x_new): sin(y) = sin(2y) / (2 cos y), no subtraction involved.
FixedReal sine_step_stable(const FixedReal& c_prev, const FixedReal& x_new);

// sqrt(f_k + g_prev), one link of the plus-chain. DomainError if negative.
FixedReal radicand_step(const FixedReal& g_prev, const FixedReal& f_k);

// Cosine and scaled-sine iterates only, at the scale of x0, with no budget
// check. The stable variant takes its first step naively (it needs a prior
// sine) and then advances chord_k = chord_{k-1} / x_k, which is the stable
// sine step carried at scale 2^k so the sine keeps its relative precision.
struct HalfAngleTrace {
  std::vector<FixedReal> x;
  std::vector<FixedReal> chord;
};
HalfAngleTrace half_angle_trace(const FixedReal& x0, const FixedReal& sine0, int k,
                                SineVariant variant);

// States 0..k at ctx.working_bits(). PrecisionError if k exceeds the budget.
std::vector<RecursionState> run_recursion(const Seed& seed, int k, const PrecisionContext& ctx,
                                          SineVariant variant);

// c_k evaluated literally as sqrt(f(k+1) - g_{k-1}) / f(k+2), the plus-chain
// built innermost-out from g_0 = sign*sqrt(s).
FixedReal nested_literal(const Seed& seed, int k, const PrecisionContext& ctx);

// The radical inside nested_literal as text, e.g. "sqrt(2-sqrt(2+sqrt(2)))".
// Scale factors with exact values print as numbers, others as f(j).
std::string nested_literal_shape(const Seed& seed, int k);

}  // namespace nestrad
