#include <algorithm>
#include <string>

#include "nestrad/drivers.hpp"
#include "nestrad/errors.hpp"
#include "nestrad/recursion.hpp"

namespace nestrad {
namespace {

// Steps for 4^-k * theta0^3 to fall below 2^-B, with theta0 <= pi.
int convergence_depth(int scale_bits) { return scale_bits / 2 + 32; }

FixedReal iterate_to_limit(const FixedReal& x0, const FixedReal& sine0, const PrecisionContext& wide,
                           int out_bits, int scale_bits, int min_depth, int max_depth) {
  const int bits = wide.working_bits();
  int cap = wide.recursion_budget();
  if (max_depth >= 0) cap = std::min(cap, max_depth);
  const FixedReal tol = FixedReal::from_int(1, bits).mul_pow2(-scale_bits);

  FixedReal x = x0;
  FixedReal chord = sine0;
  for (int k = 1; k <= cap; ++k) {
    FixedReal next_x = half_angle_step(x);
    // First step naive, then the stable sine step at scale 2^k.
    FixedReal next_chord = k == 1 ? sine_step_naive(x).mul_pow2(1) : chord / next_x;
    const bool converged = k >= min_depth && (next_chord - chord).abs() < tol;
    x = std::move(next_x);
    chord = std::move(next_chord);
    if (converged) return chord.rescaled(out_bits);
  }
  throw ConvergenceError("arccos_by_recursion: no convergence within " + std::to_string(cap) +
                         " steps");
}

}  // namespace

FixedReal arccos_by_recursion(const Seed& seed, const PrecisionContext& ctx, int min_depth,
                              int max_depth) {
  const PrecisionContext wide =
      ctx.widened_for(std::max(convergence_depth(ctx.scale_bits()), min_depth + 1));
  const int bits = wide.working_bits();
  return iterate_to_limit(seed.value(bits), seed.sine(bits), wide, ctx.working_bits(),
                          ctx.scale_bits(), min_depth, max_depth);
}

FixedReal arccos_by_recursion(const FixedReal& x0, const PrecisionContext& ctx, int min_depth,
                              int max_depth) {
  const PrecisionContext wide =
      ctx.widened_for(std::max(convergence_depth(ctx.scale_bits()), min_depth + 1));
  const int bits = wide.working_bits();
  const FixedReal x = x0.rescaled(bits);
  const FixedReal one = FixedReal::from_int(1, bits);
  if (x >= one || x < -one) throw DomainError("arccos_by_recursion: requires -1 <= x0 < 1");
  return iterate_to_limit(x, fixed_sqrt(one - x * x), wide, ctx.working_bits(), ctx.scale_bits(),
                          min_depth, max_depth);
}

}  // namespace nestrad
