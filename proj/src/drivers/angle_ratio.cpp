#include "nestrad/drivers.hpp"

#include "nestrad/errors.hpp"
#include "nestrad/oracles.hpp"

namespace nestrad {

std::optional<mpq_class> catalog_ratio(const Seed& seed) {
  const mpq_class r = seed.cos_squared();
  const bool neg = seed.sign() < 0;
  if (r == 0) return mpq_class(4);
  if (r == mpq_class(1, 4)) return neg ? mpq_class(3) : mpq_class(6);
  if (r == mpq_class(1, 2)) return neg ? mpq_class(8, 3) : mpq_class(8);
  if (r == mpq_class(3, 4)) return neg ? mpq_class(12, 5) : mpq_class(12);
  if (r == 1 && neg) return mpq_class(2);
  return std::nullopt;
}

AngleRatio angle_ratio(const Seed& seed, RatioMode mode, const PrecisionContext& ctx) {
  const int bits = ctx.working_bits();
  if (mode != RatioMode::self_consistent) {
    if (auto exact = catalog_ratio(seed)) {
      return AngleRatio{AngleRatio::Kind::exact, exact, FixedReal::from_rational(*exact, bits)};
    }
    if (mode == RatioMode::exact) {
      throw CatalogMissError("no exact angle ratio for seed " + seed.describe());
    }
  }
  FixedReal theta0 = arccos_by_recursion(seed, ctx);
  return AngleRatio{AngleRatio::Kind::self_consistent, std::nullopt,
                    pi_oracle(bits).mul_pow2(1) / theta0};
}

std::string to_string(Method method) {
  switch (method) {
    case Method::method1: return "method1";
    case Method::method2_corrected: return "method2_corrected";
    case Method::method2_as_printed: return "method2_as_printed";
    case Method::combined: return "combined";
    case Method::viete: return "viete";
    case Method::unity: return "unity";
  }
  return "?";
}

std::string to_string(Target target) {
  switch (target) {
    case Target::pi: return "pi";
    case Target::one: return "one";
    case Target::arccos: return "arccos";
  }
  return "?";
}

std::string to_string(RatioMode mode) {
  switch (mode) {
    case RatioMode::automatic: return "auto";
    case RatioMode::exact: return "exact";
    case RatioMode::self_consistent: return "self";
  }
  return "?";
}

}  // namespace nestrad
