#pragma once

#include <string>
#include <vector>

#include "nestrad/parallel.hpp"
#include "nestrad/precision.hpp"
#include "nestrad/seed.hpp"

namespace nestrad {

// The four classical nested-radical formulas for pi, each a special case of
// the general recursion with m = 2. The printed formulas count n square roots;
// recursion depth k corresponds to n = k + 1.
struct CatalogEntry {
  std::string name;                // e.g. "three-fifths"
  std::string printed_coefficient; // e.g. "(3/5)*2^(n-1)"
  std::string printed_radical;     // shape at the deepest checked n
  Seed seed;
  bool prefactor_ok = false;
  bool shape_ok = false;
  bool converged = false;
  double final_error = 0.0;
  std::string detail;  // first mismatch, empty when all checks pass

  bool passed() const { return prefactor_ok && shape_ok && converged; }
};

struct CatalogReport {
  std::string header;
  int k_max = 0;
  std::vector<CatalogEntry> entries;

  bool all_passed() const;
  // CatalogFailure naming every failed formula.
  void require_passed() const;
};

// For k = 1..k_max checks (a) the exact rational prefactor R * 2^(k-1) / f(k+2)
// against the printed coefficient at n = k + 1, (b) the literal radical shape
// against the printed pattern, (c) |P_kmax - pi| < 1e-12.
CatalogReport build_catalog_report(const PrecisionContext& ctx, int k_max = 25,
                                   Execution exec = Execution::parallel);

// As build_catalog_report, throwing CatalogFailure on any mismatch.
CatalogReport reproduce_catalog(const PrecisionContext& ctx, int k_max = 25);

// The printed pattern with n square roots, e.g. for "pow2" and n = 3:
// "sqrt(2-sqrt(2+sqrt(2)))". Formulas with a negative inner term need n >= 3.
std::string printed_radical(const std::string& name, int n);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  double worst_residual = 0.0;  // 0 for exact checks
  std::string tolerance;
  std::string detail;
};

struct IdentityReport {
  int bits = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

// The recursion's algebraic identities: scale identity and f = 2 at m = 2
// exactly on PowerForms; normalization, Pythagorean, literal/recursive and
// Viete equivalence numerically; monotone doubling; f -> 2.
IdentityReport verify_identities(const PrecisionContext& ctx, Execution exec = Execution::parallel);

}  // namespace nestrad
