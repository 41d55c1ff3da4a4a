#include "nestrad/recursion.hpp"

#include <string>

#include "nestrad/errors.hpp"
#include "nestrad/isqrt.hpp"
#include "nestrad/power_form.hpp"

namespace nestrad {
namespace {

constexpr int kClampSlackBits = 4;

// Clamp x into [-1, 1] when it overshoots by rounding slack only.
FixedReal clamp_unit(const FixedReal& x, const char* who) {
  const int b = x.scale_bits();
  const FixedReal one = FixedReal::from_int(1, b);
  const FixedReal slack = FixedReal::from_int(1, b).mul_pow2(-(b - kClampSlackBits));
  if (x > one) {
    if (x - one > slack) throw DomainError(std::string(who) + ": argument above 1");
    return one;
  }
  if (x < -one) {
    if (-one - x > slack) throw DomainError(std::string(who) + ": argument below -1");
    return -one;
  }
  return x;
}

// floor(sqrt(v / 2)) at the scale of v, v >= 0, without truncating v / 2 first.
FixedReal sqrt_half(const FixedReal& v) {
  const int b = v.scale_bits();
  if (b < 1) throw UsageError("sqrt_half: scale must be at least one bit");
  mpz_class n = v.mantissa();
  n <<= static_cast<mp_bitcnt_t>(b - 1);
  return FixedReal(isqrt(n), b);
}

void check_depth(int k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("recursion depth must be >= 1, got " + std::to_string(k));
  if (k > ctx.recursion_budget()) {
    throw PrecisionError("recursion depth " + std::to_string(k) + " exceeds the budget " +
                         std::to_string(ctx.recursion_budget()) + " of " +
                         std::to_string(ctx.working_bits()) + " working bits");
  }
}

std::vector<FixedReal> scale_factors(const mpq_class& m, int last, int bits) {
  std::vector<FixedReal> f(static_cast<std::size_t>(last) + 1);
  for (int j = 2; j <= last; ++j) f[static_cast<std::size_t>(j)] = f_power_form(j, m).evaluate(bits);
  return f;
}

}  // namespace

FixedReal half_angle_step(const FixedReal& x_prev) {
  const FixedReal x = clamp_unit(x_prev, "half_angle_step");
  return sqrt_half(FixedReal::from_int(1, x.scale_bits()) + x);
}

FixedReal sine_step_naive(const FixedReal& x_prev) {
  const FixedReal x = clamp_unit(x_prev, "sine_step_naive");
  return sqrt_half(FixedReal::from_int(1, x.scale_bits()) - x);
}

FixedReal sine_step_stable(const FixedReal& c_prev, const FixedReal& x_new) {
  if (x_new.sign() <= 0) throw DomainError("sine_step_stable: cosine must be positive");
  return c_prev / x_new.mul_pow2(1);
}

FixedReal radicand_step(const FixedReal& g_prev, const FixedReal& f_k) {
  const FixedReal r = f_k + g_prev;
  if (r.sign() < 0) throw DomainError("radicand_step: negative radicand");
  return fixed_sqrt(r);
}

HalfAngleTrace half_angle_trace(const FixedReal& x0, const FixedReal& sine0, int k,
                                SineVariant variant) {
  HalfAngleTrace t;
  t.x.reserve(static_cast<std::size_t>(k) + 1);
  t.chord.reserve(static_cast<std::size_t>(k) + 1);
  t.x.push_back(x0);
  t.chord.push_back(sine0);
  for (int j = 1; j <= k; ++j) {
    const FixedReal& x_prev = t.x.back();
    FixedReal x = half_angle_step(x_prev);
    FixedReal chord;
    if (variant == SineVariant::naive || j == 1) {
      chord = sine_step_naive(x_prev).mul_pow2(j);
    } else {
      if (x.sign() <= 0) throw DomainError("half_angle_trace: cosine must be positive");
      chord = t.chord.back() / x;
    }
    t.x.push_back(std::move(x));
    t.chord.push_back(std::move(chord));
  }
  return t;
}

std::vector<RecursionState> run_recursion(const Seed& seed, int k, const PrecisionContext& ctx,
                                          SineVariant variant) {
  check_depth(k, ctx);
  const int bits = ctx.working_bits();
  const HalfAngleTrace trace = half_angle_trace(seed.value(bits), seed.sine(bits), k, variant);
  const std::vector<FixedReal> f = scale_factors(seed.m(), k + 2, bits);

  std::vector<RecursionState> states;
  states.reserve(static_cast<std::size_t>(k) + 1);
  FixedReal g = seed.signed_root_s(bits);
  for (int j = 0; j <= k; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    if (j > 0) g = radicand_step(g, f[idx + 1]);
    RecursionState s;
    s.k = j;
    s.x = trace.x[idx];
    s.chord = trace.chord[idx];
    s.c = trace.chord[idx].mul_pow2(-j);
    s.g = g;
    s.f = f[idx + 2];
    states.push_back(std::move(s));
  }
  return states;
}

FixedReal nested_literal(const Seed& seed, int k, const PrecisionContext& ctx) {
  check_depth(k, ctx);
  const int bits = ctx.working_bits();
  const std::vector<FixedReal> f = scale_factors(seed.m(), k + 2, bits);

  FixedReal g = seed.signed_root_s(bits);
  for (int j = 1; j <= k - 1; ++j) g = radicand_step(g, f[static_cast<std::size_t>(j) + 1]);

  FixedReal radicand = f[static_cast<std::size_t>(k) + 1] - g;
  if (radicand.sign() < 0) {
    // f - g is a difference of two values near 2; rounding can undershoot zero.
    const FixedReal slack = FixedReal::from_int(1, bits).mul_pow2(-(bits - k - 8));
    if (-radicand > slack) throw DomainError("nested_literal: negative outer radicand");
    radicand = FixedReal::zero(bits);
  }
  return fixed_sqrt(radicand) / f[static_cast<std::size_t>(k) + 2];
}

std::string nested_literal_shape(const Seed& seed, int k) {
  if (k < 1) throw DomainError("nested_literal_shape: k must be >= 1");
  auto factor = [&](int j) {
    PowerForm pf = f_power_form(j, seed.m());
    if (auto v = pf.exact_value()) return v->get_str();
    return "f(" + std::to_string(j) + ")";
  };
  // Innermost term g_0 = sign * sqrt(s); carry the sign separately so that
  // "a + (-b)" prints as "a-b".
  std::string inner = "sqrt(" + seed.s().get_str() + ")";
  bool inner_negative = seed.sign() < 0;
  for (int j = 1; j <= k - 1; ++j) {
    inner = "sqrt(" + factor(j + 1) + (inner_negative ? "-" : "+") + inner + ")";
    inner_negative = false;
  }
  return "sqrt(" + factor(k + 1) + (inner_negative ? "+" : "-") + inner + ")";
}

}  // namespace nestrad
