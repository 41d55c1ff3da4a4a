#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "nestrad/fixed_real.hpp"
#include "nestrad/precision.hpp"
#include "nestrad/recursion.hpp"
#include "nestrad/seed.hpp"

namespace nestrad {

// 2*pi / theta0. Exact for seeds whose angle is a tabulated rational multiple
// of pi; otherwise 2 * pi_oracle / arccos_by_recursion(x0), in which case a pi
// "approximant" built from it is not independent of a stored pi.
struct AngleRatio {
  enum class Kind { exact, self_consistent };
  Kind kind = Kind::exact;
  std::optional<mpq_class> exact;  // set iff kind == exact
  FixedReal value;
};

enum class RatioMode { automatic, exact, self_consistent };

// Exact 2*pi / arccos(x0) for x0 in {0, +-1/2, +-sqrt(2)/2, +-sqrt(3)/2, -1}.
std::optional<mpq_class> catalog_ratio(const Seed& seed);

// CatalogMissError in exact mode when the seed is not tabulated.
AngleRatio angle_ratio(const Seed& seed, RatioMode mode, const PrecisionContext& ctx);

enum class Target { pi, one, arccos };
enum class Method { method1, method2_corrected, method2_as_printed, combined, viete, unity };

std::string to_string(Method method);
std::string to_string(Target target);
std::string to_string(RatioMode mode);

struct ApproximantParams {
  std::optional<Seed> seed;
  std::optional<mpq_class> m;
  std::optional<mpq_class> d;
  int k = 0;
  PrecisionContext ctx = PrecisionContext::for_depth(PrecisionContext::kMinScaleBits, 0);
};

struct Approximant {
  FixedReal value;  // at params.ctx.working_bits()
  Target target = Target::pi;
  Method method = Method::method1;
  ApproximantParams params;
  std::optional<AngleRatio::Kind> ratio_kind;
  // Set for results that are not approximations of their nominal target.
  std::optional<std::string> diagnostic;
};

// Deepen the recursion: (2*pi/theta0) * 2^(k-1) * c_k -> pi as k grows,
// error about pi * (theta0 / 2^k)^2 / 6. The naive variant exists to show
// the cancellation of the subtractive sine step.
Approximant pi_method1(const Seed& seed, int k, const PrecisionContext& ctx,
                       RatioMode ratio_mode = RatioMode::automatic,
                       SineVariant variant = SineVariant::stable);

enum class Method2Variant { corrected, as_printed };

// Two square roots, seed s = m^2 - d^2, m -> infinity.
// corrected:  (2*pi/theta0) * sqrt((m - sqrt(s)) / (2m)), error ~ pi d^2 / (24 m^2).
// as_printed: (2*pi/theta0) * sqrt(m - sqrt(s)) / sqrt(m s), which decays like
//             sqrt(2) * pi / m; carries a MISPRINT diagnostic.
Approximant pi_method2(const mpq_class& m, const mpq_class& d, const PrecisionContext& ctx,
                       Method2Variant variant = Method2Variant::corrected);

// Both at once: seed from (m, d), depth k, self-consistent ratio.
// Error ~ pi d^2 / (6 * 4^k * m^2).
Approximant pi_combined(const mpq_class& m, const mpq_class& d, int k, const PrecisionContext& ctx);

// 2^k c_k / theta0 -> 1, theta0 from arccos_by_recursion run at least 16
// steps deeper than k.
Approximant unity_formula(const Seed& seed, int k, const PrecisionContext& ctx);

// arccos(x0) as the limit of 2^k c_k, iterated until consecutive values differ
// by less than 2^(-B). Uses no stored pi. The context is widened internally to
// admit the depth; `max_depth` (when >= 0) caps it, ConvergenceError beyond.
FixedReal arccos_by_recursion(const Seed& seed, const PrecisionContext& ctx, int min_depth = 0,
                              int max_depth = -1);
FixedReal arccos_by_recursion(const FixedReal& x0, const PrecisionContext& ctx, int min_depth = 0,
                              int max_depth = -1);

// 2 / prod_{j=1..k} x_j for seed x0 = 0: the product of Viete, equal to
// 2^(k+1) sin(pi / 2^(k+1)).
Approximant viete_product(int k, const PrecisionContext& ctx);

// Partial sum of (1 - u)^(1/2) = sum_j binom(1/2, j) (-u)^j with u = d^2/m^2,
// `terms` terms starting from j = 0. DomainError unless 0 <= d < m.
mpq_class taylor_seed_exact(const mpq_class& m, const mpq_class& d, int terms);
FixedReal taylor_seed(const mpq_class& m, const mpq_class& d, int terms, int bits = 128);

}  // namespace nestrad
