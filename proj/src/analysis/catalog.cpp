#include "nestrad/catalog.hpp"

#include <array>

#include "nestrad/drivers.hpp"
#include "nestrad/errors.hpp"
#include "nestrad/oracles.hpp"
#include "nestrad/power_form.hpp"
#include "nestrad/recursion.hpp"

namespace nestrad {
namespace {

constexpr double kConvergenceBound = 1e-12;

struct Formula {
  const char* name;
  const char* coefficient_text;
  long s;
  int sign;
  // printed coefficient = num/den * 2^(n + shift)
  long num;
  long den;
  int shift;
  // innermost printed term is "2-sqrt(s)" rather than "sqrt(s)"
  bool negative_inner;
};

constexpr std::array<Formula, 4> kFormulas{{
    {"pow2", "2^n", 2, 1, 1, 1, 0, false},
    {"three-pow2", "3*2^(n-1)", 3, 1, 3, 1, -1, false},
    {"three-fifths", "(3/5)*2^(n-1)", 3, -1, 3, 5, -1, true},
    {"four-thirds", "(4/3)*2^(n-2)", 2, -1, 4, 3, -2, true},
}};

const Formula& formula_named(const std::string& name) {
  for (const auto& f : kFormulas) {
    if (name == f.name) return f;
  }
  throw UsageError("unknown catalog formula '" + name + "'");
}

mpq_class pow2q(long e) {
  mpz_class p = 1;
  p <<= static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
  return e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

mpq_class printed_coefficient(const Formula& f, int n) {
  return mpq_class(f.num, f.den) * pow2q(n + f.shift);
}

CatalogEntry check_formula(const Formula& f, const PrecisionContext& ctx, int k_max) {
  CatalogEntry e{f.name, f.coefficient_text, "", Seed(2, f.s, f.sign)};
  const auto ratio = catalog_ratio(e.seed);
  if (!ratio) {
    e.detail = "seed has no exact angle ratio";
    return e;
  }

  e.prefactor_ok = true;
  e.shape_ok = true;
  const int first_shape_k = f.negative_inner ? 2 : 1;
  for (int k = 1; k <= k_max; ++k) {
    const int n = k + 1;
    const auto f_next = f_power_form(k + 2, e.seed.m()).exact_value();
    const mpq_class want = printed_coefficient(f, n);
    if (!f_next || *ratio * pow2q(k - 1) / *f_next != want) {
      e.prefactor_ok = false;
      if (e.detail.empty()) e.detail = "prefactor mismatch at n=" + std::to_string(n);
    }
    if (k >= first_shape_k) {
      const std::string got = nested_literal_shape(e.seed, k);
      const std::string printed = printed_radical(f.name, n);
      if (got != printed) {
        e.shape_ok = false;
        if (e.detail.empty()) e.detail = "shape mismatch at n=" + std::to_string(n) + ": " + got;
      }
      e.printed_radical = printed;
    }
  }

  const PrecisionContext wide = ctx.widened_for(k_max);
  const int bits = wide.working_bits();
  const FixedReal value = FixedReal::from_rational(*ratio, bits) *
                          nested_literal(e.seed, k_max, wide).mul_pow2(k_max - 1);
  e.final_error = (value - pi_oracle(bits)).abs().to_double();
  e.converged = e.final_error < kConvergenceBound;
  if (!e.converged && e.detail.empty()) e.detail = "no convergence at n=" + std::to_string(k_max + 1);
  return e;
}

}  // namespace

std::string printed_radical(const std::string& name, int n) {
  const Formula& f = formula_named(name);
  const std::string s = std::to_string(f.s);
  const int min_n = f.negative_inner ? 3 : 2;
  if (n < min_n) throw DomainError("printed_radical: n too small for " + name);
  // Build the plus-chain under the outer "2-": n - 1 roots.
  std::string chain;
  int roots;
  if (f.negative_inner) {
    chain = "sqrt(2-sqrt(" + s + "))";
    roots = 2;
  } else {
    chain = "sqrt(" + s + ")";
    roots = 1;
  }
  for (; roots < n - 1; ++roots) chain = "sqrt(2+" + chain + ")";
  return "sqrt(2-" + chain + ")";
}

bool CatalogReport::all_passed() const {
  for (const auto& e : entries) {
    if (!e.passed()) return false;
  }
  return !entries.empty();
}

void CatalogReport::require_passed() const {
  std::string failed;
  for (const auto& e : entries) {
    if (e.passed()) continue;
    if (!failed.empty()) failed += "; ";
    failed += e.name + " " + e.printed_coefficient + ": " + e.detail;
  }
  if (!failed.empty()) throw CatalogFailure("catalog reproduction failed: " + failed);
}

CatalogReport build_catalog_report(const PrecisionContext& ctx, int k_max, Execution exec) {
  if (k_max < 2) throw DomainError("catalog: k_max must be >= 2");
  CatalogReport report;
  report.k_max = k_max;
  report.header = "classical nested radicals, m = 2; n square roots <-> depth k = n - 1";
  report.entries = map_rows(std::span<const Formula>(kFormulas),
                            [&](const Formula& f) { return check_formula(f, ctx, k_max); }, exec);
  return report;
}

CatalogReport reproduce_catalog(const PrecisionContext& ctx, int k_max) {
  CatalogReport report = build_catalog_report(ctx, k_max);
  report.require_passed();
  return report;
}

}  // namespace nestrad
