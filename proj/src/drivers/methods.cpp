#include <utility>

#include "nestrad/drivers.hpp"
#include "nestrad/errors.hpp"
#include "nestrad/oracles.hpp"
#include "nestrad/recursion.hpp"

namespace nestrad {
namespace {

constexpr int kUnityExtraDepth = 16;

void require_m_d(const mpq_class& m, const mpq_class& d) {
  if (sgn(d) <= 0 || d >= m) throw DomainError("requires 0 < d < m");
}

}  // namespace

Approximant pi_method1(const Seed& seed, int k, const PrecisionContext& ctx, RatioMode ratio_mode,
                       SineVariant variant) {
  const auto states = run_recursion(seed, k, ctx, variant);
  const AngleRatio ratio = angle_ratio(seed, ratio_mode, ctx);

  Approximant a;
  // R * 2^(k-1) * c_k = R * chord_k / 2
  a.value = (ratio.value * states.back().chord).mul_pow2(-1);
  a.target = Target::pi;
  a.method = Method::method1;
  a.params.seed = seed;
  a.params.k = k;
  a.params.ctx = ctx;
  a.ratio_kind = ratio.kind;
  return a;
}

Approximant pi_method2(const mpq_class& m, const mpq_class& d, const PrecisionContext& ctx,
                       Method2Variant variant) {
  require_m_d(m, d);
  const Seed seed = Seed::from_m_d(m, d);
  const int bits = ctx.working_bits();

  const FixedReal theta0 = arccos_by_recursion(seed, ctx);
  const FixedReal ratio = pi_oracle(bits).mul_pow2(1) / theta0;
  const FixedReal m_fx = FixedReal::from_rational(m, bits);
  const FixedReal root_s = sqrt_of_rational(seed.s(), bits);
  const FixedReal inner = fixed_sqrt(m_fx - root_s);

  Approximant a;
  a.target = Target::pi;
  a.params.seed = seed;
  a.params.m = m;
  a.params.d = d;
  a.params.k = 1;
  a.params.ctx = ctx;
  a.ratio_kind = AngleRatio::Kind::self_consistent;
  if (variant == Method2Variant::corrected) {
    // sqrt(m - sqrt(s)) / sqrt(2m) = c_1
    a.value = ratio * (inner / fixed_sqrt(m_fx.mul_pow2(1)));
    a.method = Method::method2_corrected;
  } else {
    const FixedReal root_ms = sqrt_of_rational(m * seed.s(), bits);
    a.value = ratio * (inner / root_ms);
    a.method = Method::method2_as_printed;
    a.diagnostic =
        "MISPRINT: prefactor 1/sqrt(m*s) taken literally; the value decays like "
        "sqrt(2)*pi/m and does not approach pi (the half-angle derivation gives 1/sqrt(2m))";
  }
  return a;
}

Approximant pi_combined(const mpq_class& m, const mpq_class& d, int k, const PrecisionContext& ctx) {
  require_m_d(m, d);
  Approximant a = pi_method1(Seed::from_m_d(m, d), k, ctx, RatioMode::self_consistent);
  a.method = Method::combined;
  a.params.m = m;
  a.params.d = d;
  return a;
}

Approximant unity_formula(const Seed& seed, int k, const PrecisionContext& ctx) {
  const auto states = run_recursion(seed, k, ctx, SineVariant::stable);
  const FixedReal theta0 = arccos_by_recursion(seed, ctx, k + kUnityExtraDepth);

  Approximant a;
  a.value = states.back().chord / theta0;
  a.target = Target::one;
  a.method = Method::unity;
  a.params.seed = seed;
  a.params.k = k;
  a.params.ctx = ctx;
  a.ratio_kind = AngleRatio::Kind::self_consistent;
  return a;
}

Approximant viete_product(int k, const PrecisionContext& ctx) {
  const Seed seed(1, 0, 1);
  const auto states = run_recursion(seed, k, ctx, SineVariant::stable);
  const int bits = ctx.working_bits();
  FixedReal product = FixedReal::from_int(1, bits);
  for (int j = 1; j <= k; ++j) product *= states[static_cast<std::size_t>(j)].x;

  Approximant a;
  a.value = FixedReal::from_int(2, bits) / product;
  a.target = Target::pi;
  a.method = Method::viete;
  a.params.seed = seed;
  a.params.k = k;
  a.params.ctx = ctx;
  return a;
}

}  // namespace nestrad
