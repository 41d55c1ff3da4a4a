#include <algorithm>
#include <cmath>
#include <functional>

#include "nestrad/catalog.hpp"
#include "nestrad/drivers.hpp"
#include "nestrad/oracles.hpp"
#include "nestrad/power_form.hpp"
#include "nestrad/recursion.hpp"

namespace nestrad {
namespace {

const std::array<long, 4> kBases{2, 3, 5, 10};

std::vector<Seed> audited_seeds() {
  return {Seed(2, 2, 1), Seed(2, 2, -1), Seed(2, 3, 1), Seed(2, 3, -1)};
}

FixedReal pow2_at(long e, int bits) { return FixedReal::from_int(1, bits).mul_pow2(e); }

// Tracks the largest residual seen and whether each stayed inside its bound.
struct Tally {
  bool ok = true;
  double worst = 0.0;
  std::string detail;

  void add(const FixedReal& residual, const FixedReal& bound, const std::string& where) {
    worst = std::max(worst, residual.to_double());
    if (residual >= bound && ok) {
      ok = false;
      detail = where;
    }
  }
};

IdentityCheck scale_identity() {
  IdentityCheck c{"scale identity f(k+1)^2 = 2 f(k)", true, 0.0, "exact", ""};
  for (long m : kBases) {
    for (int k = 2; k <= 64; ++k) {
      const PowerForm lhs = f_power_form(k + 1, m).squared();
      const PowerForm rhs = f_power_form(k, m).times_pow2(1);
      if (!(lhs == rhs) && c.passed) {
        c.passed = false;
        c.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
      }
    }
  }
  return c;
}

IdentityCheck f_exact_at_two() {
  IdentityCheck c{"f(k) = 2 exactly at m = 2", true, 0.0, "exact", ""};
  for (int k = 2; k <= 64; ++k) {
    const auto v = f_power_form(k, 2).exact_value();
    if ((!v || *v != 2) && c.passed) {
      c.passed = false;
      c.detail = "k=" + std::to_string(k);
    }
  }
  return c;
}

IdentityCheck normalization(const PrecisionContext& ctx) {
  constexpr int kDepth = 20;
  const PrecisionContext wide = ctx.widened_for(kDepth);
  const int bits = wide.working_bits();
  Tally t;
  for (const Seed& seed : audited_seeds()) {
    for (const auto& st : run_recursion(seed, kDepth, wide, SineVariant::stable)) {
      t.add((st.x * st.f - st.g).abs(), pow2_at(-ctx.scale_bits() + st.k + 6, bits),
            seed.describe() + " k=" + std::to_string(st.k));
    }
  }
  return {"normalization x_k f(k+2) = g_k", t.ok, t.worst, "2^(-B+k+6), k <= 20", t.detail};
}

IdentityCheck pythagorean(const PrecisionContext& ctx) {
  constexpr int kDepth = 30;
  const PrecisionContext wide = ctx.widened_for(kDepth);
  const int bits = wide.working_bits();
  const FixedReal one = FixedReal::from_int(1, bits);
  Tally t;
  for (const Seed& seed : audited_seeds()) {
    for (SineVariant v : {SineVariant::naive, SineVariant::stable}) {
      for (const auto& st : run_recursion(seed, kDepth, wide, v)) {
        t.add((st.x * st.x + st.c * st.c - one).abs(), pow2_at(-ctx.scale_bits() + st.k + 6, bits),
              seed.describe() + " k=" + std::to_string(st.k));
      }
    }
  }
  return {"pythagorean x_k^2 + c_k^2 = 1", t.ok, t.worst, "2^(-B+k+6), k <= 30, both variants",
          t.detail};
}

IdentityCheck literal_equivalence(const PrecisionContext& ctx) {
  constexpr int kDepth = 20;
  const PrecisionContext wide = ctx.widened_for(kDepth);
  const int bits = wide.working_bits();
  Tally t;
  for (const Seed& seed : audited_seeds()) {
    const auto states = run_recursion(seed, kDepth, wide, SineVariant::stable);
    for (int k = 1; k <= kDepth; ++k) {
      const FixedReal lit = nested_literal(seed, k, wide);
      t.add((lit - states[static_cast<std::size_t>(k)].c).abs(),
            pow2_at(-ctx.scale_bits() + 2 * k + 8, bits),
            seed.describe() + " k=" + std::to_string(k));
    }
  }
  return {"literal radical = stable recursion", t.ok, t.worst, "2^(-B+2k+8), k <= 20", t.detail};
}

IdentityCheck viete_equivalence(const PrecisionContext& ctx) {
  constexpr int kDepth = 30;
  const PrecisionContext wide = ctx.widened_for(kDepth);
  const int bits = wide.working_bits();
  const Seed zero(1, 0, 1);
  Tally t;
  for (int k = 1; k <= kDepth; ++k) {
    const FixedReal v = viete_product(k, wide).value;
    const FixedReal p = pi_method1(zero, k, wide).value;
    t.add((v - p).abs(), pow2_at(-ctx.scale_bits() + 8, bits), "k=" + std::to_string(k));
  }
  return {"Viete product = method 1 at x0 = 0", t.ok, t.worst, "2^(-B+8), k <= 30", t.detail};
}

IdentityCheck monotone_doubling(const PrecisionContext& ctx) {
  constexpr int kDepth = 30;
  const PrecisionContext wide = ctx.widened_for(kDepth);
  const int bits = wide.working_bits();
  IdentityCheck c{"2^k c_k increasing, bounded by theta0", true, 0.0, "strict, k <= 30", ""};
  for (const Seed& seed : audited_seeds()) {
    const FixedReal theta0 =
        arccos_oracle(seed.value(bits), bits) + pow2_at(-ctx.scale_bits(), bits);
    const auto states = run_recursion(seed, kDepth, wide, SineVariant::stable);
    for (std::size_t i = 1; i < states.size(); ++i) {
      const bool ok = states[i - 1].chord < states[i].chord && states[i].chord <= theta0;
      if (!ok && c.passed) {
        c.passed = false;
        c.detail = seed.describe() + " k=" + std::to_string(i);
      }
    }
  }
  return c;
}

IdentityCheck f_tends_to_two(const PrecisionContext& ctx) {
  const int bits = ctx.working_bits();
  IdentityCheck c{"f(k) -> 2", true, 0.0, "|f(k)-2| <= 2a e^a, a = |ln(m/2)|/2^(k-2), k in [6,40]",
                  ""};
  for (long m : kBases) {
    for (int k = 6; k <= 40; ++k) {
      const double dev = (f_power_form(k, m).evaluate(bits) - FixedReal::from_int(2, bits))
                             .abs()
                             .to_double();
      const double a = std::fabs(std::log(static_cast<double>(m) / 2.0)) / std::ldexp(1.0, k - 2);
      c.worst_residual = std::max(c.worst_residual, dev);
      if (dev > 2.0 * a * std::exp(a) && c.passed) {
        c.passed = false;
        c.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
      }
    }
  }
  return c;
}

}  // namespace

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport verify_identities(const PrecisionContext& ctx, Execution exec) {
  using Check = std::function<IdentityCheck()>;
  const std::vector<Check> checks{
      scale_identity,
      f_exact_at_two,
      [&] { return normalization(ctx); },
      [&] { return pythagorean(ctx); },
      [&] { return literal_equivalence(ctx); },
      [&] { return viete_equivalence(ctx); },
      [&] { return monotone_doubling(ctx); },
      [&] { return f_tends_to_two(ctx); },
  };
  IdentityReport report;
  report.bits = ctx.scale_bits();
  report.checks = map_rows(std::span<const Check>(checks), [](const Check& c) { return c(); }, exec);
  return report;
}

}  // namespace nestrad
