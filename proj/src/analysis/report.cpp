#include "nestrad/report.hpp"

#include <string>

#include "nestrad/errors.hpp"
#include "nestrad/oracles.hpp"

namespace nestrad {
namespace {

constexpr int kRatioDigits = 6;

mpq_class decimal_to_rational(const std::string& text) {
  std::string digits;
  int frac = 0;
  bool point = false;
  bool negative = false;
  for (char ch : text) {
    if (ch == '-') {
      negative = true;
    } else if (ch == '.') {
      point = true;
    } else {
      digits.push_back(ch);
      if (point) ++frac;
    }
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
  mpq_class q(mpz_class(digits, 10), den);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

mpq_class pow10q(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

void require_axis(Method method, SweepAxis axis) {
  const bool k_only = method == Method::method1 || method == Method::viete || method == Method::unity;
  const bool m_only = method == Method::method2_corrected || method == Method::method2_as_printed;
  if ((k_only && axis != SweepAxis::k) || (m_only && axis != SweepAxis::m)) {
    throw UsageError("sweep axis does not apply to method " + to_string(method));
  }
}

}  // namespace

int reference_bits(const PrecisionContext& ctx) { return 4 * ctx.working_bits(); }

int report_digits(const PrecisionContext& ctx) { return decimal_digits_for_bits(ctx.scale_bits()); }

int correct_digits(const mpq_class& abs_error) {
  if (sgn(abs_error) <= 0) throw DomainError("correct_digits: error must be positive");
  // Estimate from bit lengths, then settle exactly: 10^-(j+1) < e <= 10^-j.
  const long bit_gap = static_cast<long>(mpz_sizeinbase(abs_error.get_den_mpz_t(), 2)) -
                       static_cast<long>(mpz_sizeinbase(abs_error.get_num_mpz_t(), 2));
  int j = static_cast<int>(static_cast<double>(bit_gap) * 0.30102999566398119521);
  while (abs_error > pow10q(-j)) --j;
  while (abs_error <= pow10q(-(j + 1))) ++j;
  return j;
}

ReportRow measure_row(std::string index, const FixedReal& value, const FixedReal& target,
                      int digits) {
  ReportRow row;
  row.index = std::move(index);
  row.approximant = value.to_decimal(digits);
  const FixedReal printed = FixedReal::from_decimal(row.approximant, target.scale_bits());
  row.abs_error = (printed - target).abs().to_decimal(digits + kErrorExtraDigits);
  const mpq_class err = decimal_to_rational(row.abs_error);
  if (sgn(err) > 0) row.correct_digits = correct_digits(err);
  return row;
}

void fill_error_ratios(std::vector<ReportRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].error_ratio.reset();
    if (i == 0) continue;
    const mpq_class prev = decimal_to_rational(rows[i - 1].abs_error);
    const mpq_class cur = decimal_to_rational(rows[i].abs_error);
    if (sgn(prev) == 0 || sgn(cur) == 0) continue;
    rows[i].error_ratio = FixedReal::from_rational(prev / cur, 64).to_decimal(kRatioDigits);
  }
}

ConvergenceReport convergence_table(Method method, const TableParams& params, const Sweep& sweep,
                                    const PrecisionContext& ctx, Execution exec) {
  require_axis(method, sweep.axis);
  const bool needs_seed = method == Method::method1 || method == Method::unity;
  if (needs_seed && !params.seed) throw UsageError(to_string(method) + " requires a seed");

  const Target target = method == Method::unity ? Target::one : Target::pi;
  const int ref = reference_bits(ctx);
  const FixedReal target_value =
      target == Target::one ? FixedReal::from_int(1, ref) : pi_oracle(ref);
  const int digits = report_digits(ctx);

  auto compute = [&](const long& index) -> ReportRow {
    const int k = static_cast<int>(index);
    const mpq_class m_index(index);
    Approximant a;
    switch (method) {
      case Method::method1: a = pi_method1(*params.seed, k, ctx, params.ratio_mode); break;
      case Method::viete: a = viete_product(k, ctx); break;
      case Method::unity: a = unity_formula(*params.seed, k, ctx); break;
      case Method::method2_corrected:
        a = pi_method2(m_index, params.d, ctx, Method2Variant::corrected);
        break;
      case Method::method2_as_printed:
        a = pi_method2(m_index, params.d, ctx, Method2Variant::as_printed);
        break;
      case Method::combined:
        a = sweep.axis == SweepAxis::k ? pi_combined(params.m, params.d, k, ctx)
                                       : pi_combined(m_index, params.d, params.k, ctx);
        break;
    }
    return measure_row(std::to_string(index), a.value.rescaled(ref), target_value, digits);
  };

  ConvergenceReport report;
  report.rows = map_rows(std::span<const long>(sweep.indices), compute, exec);
  fill_error_ratios(report.rows);

  ReportMeta& meta = report.meta;
  meta.method = to_string(method);
  meta.target = to_string(target);
  meta.bits = ctx.scale_bits();
  meta.guard_bits = ctx.guard_bits();
  meta.oracle_digits = decimal_digits_for_bits(ref);
  meta.params.emplace_back("axis", sweep.axis == SweepAxis::k ? "k" : "m");
  if (params.seed) {
    meta.params.emplace_back("m", params.seed->m().get_str());
    meta.params.emplace_back("s", params.seed->s().get_str());
    meta.params.emplace_back("sign", params.seed->sign() < 0 ? "-" : "+");
  }
  if (method == Method::method1) meta.params.emplace_back("ratio_mode", to_string(params.ratio_mode));
  if (method == Method::method2_corrected || method == Method::method2_as_printed ||
      method == Method::combined) {
    meta.params.emplace_back("d", params.d.get_str());
  }
  if (method == Method::combined) {
    if (sweep.axis == SweepAxis::k) {
      meta.params.emplace_back("m", params.m.get_str());
    } else {
      meta.params.emplace_back("k", std::to_string(params.k));
    }
  }
  if (method == Method::method2_as_printed) {
    meta.diagnostic = "MISPRINT: prefactor 1/sqrt(m*s) taken literally; values decay like 1/m";
  }
  return report;
}

std::vector<double> empirical_rate(std::span<const double> errors) {
  for (double e : errors) {
    if (!(e > 0.0)) throw DomainError("empirical_rate: errors must be positive; raise precision");
  }
  std::vector<double> out;
  for (std::size_t i = 1; i < errors.size(); ++i) out.push_back(errors[i - 1] / errors[i]);
  return out;
}

}  // namespace nestrad
