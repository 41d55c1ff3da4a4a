#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "nestrad/audit.hpp"
#include "nestrad/catalog.hpp"
#include "nestrad/errors.hpp"
#include "nestrad/isqrt.hpp"
#include "nestrad/oracles.hpp"
#include "nestrad/report.hpp"

namespace nestrad {
namespace {

Sweep k_range(long lo, long hi) {
  Sweep s;
  for (long k = lo; k <= hi; ++k) s.indices.push_back(k);
  return s;
}

Sweep m_values(std::initializer_list<long> ms) {
  Sweep s{SweepAxis::m, ms};
  return s;
}

TableParams seeded(const Seed& seed) {
  TableParams p;
  p.seed = seed;
  return p;
}

const PrecisionContext kCtx = PrecisionContext::for_depth(128, 40);

TEST(CorrectDigits, Exact) {
  EXPECT_EQ(correct_digits(mpq_class(1, 1000)), 3);
  EXPECT_EQ(correct_digits(mpq_class(999, 1000000)), 3);
  EXPECT_EQ(correct_digits(mpq_class(1001, 1000000)), 2);
  EXPECT_EQ(correct_digits(mpq_class(5)), -1);
  EXPECT_THROW(correct_digits(0), DomainError);
}

TEST(ConvergenceTable, Method1Example) {
  const auto r = convergence_table(Method::method1, seeded(Seed(2, 2, 1)), k_range(1, 3), kCtx);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].approximant.substr(0, 9), "3.0614674");
  EXPECT_EQ(r.rows[1].approximant.substr(0, 9), "3.1214451");
  EXPECT_EQ(r.rows[2].approximant.substr(0, 9), "3.1365484");
  EXPECT_EQ(r.rows[0].index, "1");
  EXPECT_FALSE(r.rows[0].error_ratio.has_value());
  EXPECT_TRUE(r.rows[1].error_ratio.has_value());
  EXPECT_EQ(r.meta.method, "method1");
  EXPECT_EQ(r.meta.target, "pi");
  EXPECT_EQ(r.meta.bits, 128);
  EXPECT_EQ(r.meta.guard_bits, kCtx.guard_bits());
}

TEST(ConvergenceTable, Method2Example) {
  const auto r = convergence_table(Method::method2_corrected, TableParams{}, m_values({100, 1000}), kCtx);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_NEAR(std::stod(*r.rows[1].error_ratio), 100.0, 1.0);
}

TEST(ConvergenceTable, UnityExample) {
  const auto r = convergence_table(Method::unity, seeded(Seed(1, 0, 1)), k_range(1, 2), kCtx);
  EXPECT_EQ(r.rows[0].approximant.substr(0, 9), "0.9003163");
  EXPECT_EQ(r.rows[1].approximant.substr(0, 9), "0.9744953");
  EXPECT_EQ(r.meta.target, "one");
}

TEST(ConvergenceTable, AxisAndSeedValidation) {
  EXPECT_THROW(convergence_table(Method::method1, seeded(Seed(2, 2, 1)), m_values({10}), kCtx), UsageError);
  EXPECT_THROW(convergence_table(Method::method2_corrected, TableParams{}, k_range(1, 2), kCtx), UsageError);
  EXPECT_THROW(convergence_table(Method::method1, TableParams{}, k_range(1, 2), kCtx), UsageError);
  EXPECT_THROW(convergence_table(Method::method1, seeded(Seed(2, 2, 1)), k_range(0, 2), kCtx), DomainError);
  TableParams exact = seeded(Seed(5, 16, 1));
  exact.ratio_mode = RatioMode::exact;
  EXPECT_THROW(convergence_table(Method::method1, exact, k_range(1, 2), kCtx), CatalogMissError);
}

TEST(ConvergenceTable, EmptySweep) {
  const auto r = convergence_table(Method::method1, seeded(Seed(2, 2, 1)), Sweep{}, kCtx);
  EXPECT_TRUE(r.rows.empty());
}

TEST(ConvergenceTable, SerialMatchesParallel) {
  TableParams combined;
  combined.m = 100;
  combined.d = 1;
  combined.k = 5;
  const struct {
    Method method;
    TableParams params;
    Sweep sweep;
  } cases[] = {
      {Method::method1, seeded(Seed(2, 3, -1)), k_range(1, 40)},
      {Method::unity, seeded(Seed(5, 16, 1)), k_range(1, 20)},
      {Method::viete, TableParams{}, k_range(1, 30)},
      {Method::combined, combined, k_range(1, 15)},
      {Method::combined, combined, m_values({50, 100, 200, 400})},
      {Method::method2_corrected, TableParams{}, m_values({10, 100, 1000, 10000})},
  };
  for (const auto& c : cases) {
    const auto serial = convergence_table(c.method, c.params, c.sweep, kCtx, Execution::serial);
    const auto parallel = convergence_table(c.method, c.params, c.sweep, kCtx, Execution::parallel);
    EXPECT_EQ(serial, parallel) << to_string(c.method);
  }
}

TEST(ConvergenceTable, ParallelRethrowsFirstError) {
  Sweep s = k_range(1, 8);
  s.indices[5] = 0;
  EXPECT_THROW(convergence_table(Method::method1, seeded(Seed(2, 2, 1)), s, kCtx), DomainError);
  s.indices[2] = 10000;
  EXPECT_THROW(convergence_table(Method::method1, seeded(Seed(2, 2, 1)), s, kCtx), PrecisionError);
}

TEST(ConvergenceTable, AbsErrorRecomputes) {
  const int ref = reference_bits(kCtx);
  const int digits = report_digits(kCtx);
  const FixedReal pi = pi_oracle(ref);
  const auto r = convergence_table(Method::method1, seeded(Seed(2, 2, 1)), k_range(1, 40), kCtx);
  for (const auto& row : r.rows) {
    const FixedReal printed = FixedReal::from_decimal(row.approximant, ref);
    EXPECT_EQ((printed - pi).abs().to_decimal(digits + kErrorExtraDigits), row.abs_error) << row.index;
  }
}

TEST(ConvergenceTable, CatalogRatiosNearFour) {
  for (const Seed& seed : {Seed(2, 2, 1), Seed(2, 3, 1), Seed(2, 3, -1), Seed(2, 2, -1), Seed(1, 0, 1)}) {
    const auto r = convergence_table(Method::method1, seeded(seed), k_range(5, 30), kCtx);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
      const double ratio = std::stod(*r.rows[i].error_ratio);
      EXPECT_GE(ratio, 3.5) << seed.describe() << " k=" << r.rows[i].index;
      EXPECT_LE(ratio, 4.5) << seed.describe() << " k=" << r.rows[i].index;
    }
  }
}

TEST(EmpiricalRate, Examples) {
  const std::vector<double> geo = {1e-2, 2.5e-3, 6.25e-4};
  const auto r = empirical_rate(geo);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_DOUBLE_EQ(r[0], 4.0);
  EXPECT_DOUBLE_EQ(r[1], 4.0);
  const std::vector<double> two = {1e-2, 1e-4};
  EXPECT_DOUBLE_EQ(empirical_rate(two).at(0), 100.0);
  const std::vector<double> one = {1e-3};
  EXPECT_TRUE(empirical_rate(one).empty());
  const std::vector<double> bad = {1e-3, 0.0};
  EXPECT_THROW(empirical_rate(bad), DomainError);
  const std::vector<double> neg = {-1e-3, 1e-4};
  EXPECT_THROW(empirical_rate(neg), DomainError);
}

TEST(Audit, DoubleEquivalentPrecision) {
  const AuditReport a = cancellation_audit(Seed(2, 2, 1), 40, 53, 4 * 53);
  ASSERT_EQ(a.rows.size(), 40u);
  EXPECT_EQ(a.rows.back().k, 40);
  EXPECT_LE(a.rows.back().stable_error, 1e-13);
  EXPECT_GE(a.rows.back().naive_error, 1e-7);
  EXPECT_GT(a.rows[a.naive_argmin()].naive_error, a.rows.back().stable_error);
  ASSERT_TRUE(a.naive_increasing_from().has_value());
  EXPECT_LT(*a.naive_increasing_from(), 39u);
}

TEST(Audit, StableNonIncreasingUntilFloor) {
  const AuditReport a = cancellation_audit(Seed(2, 2, 1), 40, 53, 4 * 53);
  // Before the floor (truncation error well above 2^-53 * k) each step shrinks it.
  for (std::size_t i = 1; i < a.rows.size(); ++i) {
    if (a.rows[i - 1].stable_error > 1e-12) EXPECT_LE(a.rows[i].stable_error, a.rows[i - 1].stable_error);
  }
}

TEST(Audit, ErrorsMatchIndependentRecomputation) {
  // Naive iterate on raw 53-bit mantissas: floor(sqrt(v / 2) * 2^53) = isqrt(v << 52).
  const int bits = 53;
  const AuditReport a = cancellation_audit(Seed(2, 2, 1), 20, bits, 4 * bits);
  const mpz_class one = mpz_class(1) << bits;
  mpz_class x = Seed(2, 2, 1).value(bits).mantissa();
  const FixedReal pi = pi_oracle(4 * bits);
  for (int k = 1; k <= 20; ++k) {
    const mpz_class c = isqrt((one - x) << (bits - 1));
    x = isqrt((one + x) << (bits - 1));
    const FixedReal p = FixedReal(c, bits).rescaled(4 * bits).mul_int(8).mul_pow2(k - 1);
    const double expect = (p - pi).abs().to_double();
    EXPECT_NEAR(a.rows[k - 1].naive_error, expect, expect * 1e-12) << k;
  }
}

TEST(Audit, Preconditions) {
  EXPECT_THROW(cancellation_audit(Seed(2, 2, 1), 10, 23, 200), UsageError);
  EXPECT_THROW(cancellation_audit(Seed(2, 2, 1), 10, 53, 211), UsageError);
}

TEST(Catalog, ReproducesAllFour) {
  const CatalogReport r = reproduce_catalog(PrecisionContext::for_depth(128, 25));
  ASSERT_EQ(r.entries.size(), 4u);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.k_max, 25);
  EXPECT_NE(r.header.find("k = n - 1"), std::string::npos);
  for (const auto& e : r.entries) {
    EXPECT_TRUE(e.prefactor_ok) << e.name;
    EXPECT_TRUE(e.shape_ok) << e.name;
    EXPECT_LT(e.final_error, 1e-12) << e.name;
    EXPECT_TRUE(e.detail.empty()) << e.detail;
  }
  EXPECT_EQ(r.entries[0].seed, Seed(2, 2, 1));
  EXPECT_EQ(r.entries[1].seed, Seed(2, 3, 1));
  EXPECT_EQ(r.entries[2].seed, Seed(2, 3, -1));
  EXPECT_EQ(r.entries[3].seed, Seed(2, 2, -1));
  EXPECT_EQ(r.entries[2].printed_coefficient, "(3/5)*2^(n-1)");
}

TEST(Catalog, PrintedRadicals) {
  EXPECT_EQ(printed_radical("pow2", 3), "sqrt(2-sqrt(2+sqrt(2)))");
  EXPECT_EQ(printed_radical("three-pow2", 2), "sqrt(2-sqrt(3))");
  EXPECT_EQ(printed_radical("three-fifths", 3), "sqrt(2-sqrt(2-sqrt(3)))");
  EXPECT_EQ(printed_radical("three-fifths", 4), "sqrt(2-sqrt(2+sqrt(2-sqrt(3))))");
  EXPECT_EQ(printed_radical("four-thirds", 4), "sqrt(2-sqrt(2+sqrt(2-sqrt(2))))");
}

TEST(Catalog, FailureIsReported) {
  CatalogReport r = build_catalog_report(PrecisionContext::for_depth(128, 25), 25, Execution::serial);
  r.entries[2].prefactor_ok = false;
  EXPECT_FALSE(r.all_passed());
  try {
    r.require_passed();
    FAIL() << "expected CatalogFailure";
  } catch (const CatalogFailure& e) {
    EXPECT_NE(std::string(e.what()).find("three-fifths"), std::string::npos);
  }
}

TEST(Catalog, ShallowDepthDoesNotConverge) {
  const CatalogReport r = build_catalog_report(PrecisionContext::for_depth(128, 4), 4);
  EXPECT_FALSE(r.all_passed());
  for (const auto& e : r.entries) EXPECT_TRUE(e.prefactor_ok) << e.name;
}

TEST(Identities, AllPass) {
  const IdentityReport r = verify_identities(PrecisionContext(256, 64));
  EXPECT_TRUE(r.all_passed());
  EXPECT_GE(r.checks.size(), 7u);
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    if (c.name.find("normalization") != std::string::npos) {
      EXPECT_LT(c.worst_residual, std::ldexp(1.0, -220));
    }
  }
}

TEST(Identities, SerialMatchesParallel) {
  const PrecisionContext ctx(128, 64);
  const IdentityReport a = verify_identities(ctx, Execution::serial);
  const IdentityReport b = verify_identities(ctx, Execution::parallel);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
    EXPECT_EQ(a.checks[i].worst_residual, b.checks[i].worst_residual);
  }
}

}  // namespace
}  // namespace nestrad
