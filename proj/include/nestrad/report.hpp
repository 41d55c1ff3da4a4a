#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nestrad/drivers.hpp"
#include "nestrad/fixed_real.hpp"
#include "nestrad/parallel.hpp"
#include "nestrad/precision.hpp"

namespace nestrad {

struct ReportRow {
  std::string index;
  std::string approximant;  // plain decimal, report digits
  std::string abs_error;    // |approximant - target| in plain decimal
  std::optional<int> correct_digits;       // floor(-log10 abs_error); empty when 0
  std::optional<std::string> error_ratio;  // previous abs_error / this one

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportMeta {
  std::string method;
  std::string target;
  std::vector<std::pair<std::string, std::string>> params;
  int bits = 0;
  int guard_bits = 0;
  int oracle_digits = 0;
  std::optional<std::string> diagnostic;

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

struct ConvergenceReport {
  ReportMeta meta;
  std::vector<ReportRow> rows;

  friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

// Errors are measured against a reference at reference_bits(ctx) =
// 4 * working bits, so the reference never limits reported digits.
int reference_bits(const PrecisionContext& ctx);
// Digits printed for approximants; abs_error carries kErrorExtraDigits more.
int report_digits(const PrecisionContext& ctx);
inline constexpr int kErrorExtraDigits = 8;

// floor(-log10 e) for e > 0, exact.
int correct_digits(const mpq_class& abs_error);

// Formats `value` at report precision and measures the printed value against
// `target` (given at reference precision).
ReportRow measure_row(std::string index, const FixedReal& value, const FixedReal& target,
                      int digits);
// Fills error_ratio for rows 1..n-1 from the printed abs_error strings.
void fill_error_ratios(std::vector<ReportRow>& rows);

enum class SweepAxis { k, m };

struct Sweep {
  SweepAxis axis = SweepAxis::k;
  std::vector<long> indices;
};

struct TableParams {
  std::optional<Seed> seed;       // method1, unity
  mpq_class m = 0;                // method2 / combined along the k axis
  mpq_class d = 1;                // method2 / combined
  int k = 1;                      // combined along the m axis
  RatioMode ratio_mode = RatioMode::automatic;
};

// One row per sweep index. Rows are computed independently (in parallel
// unless exec is serial); the report is identical either way.
ConvergenceReport convergence_table(Method method, const TableParams& params, const Sweep& sweep,
                                    const PrecisionContext& ctx,
                                    Execution exec = Execution::parallel);

// e_i / e_(i+1) for consecutive pairs. DomainError on a non-positive entry.
std::vector<double> empirical_rate(std::span<const double> errors);

}  // namespace nestrad
