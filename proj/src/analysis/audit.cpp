#include "nestrad/audit.hpp"

#include <algorithm>

#include "nestrad/drivers.hpp"
#include "nestrad/errors.hpp"
#include "nestrad/oracles.hpp"
#include "nestrad/recursion.hpp"
#include "nestrad/report.hpp"

namespace nestrad {

std::size_t AuditReport::naive_argmin() const {
  auto it = std::min_element(rows.begin(), rows.end(), [](const AuditRow& a, const AuditRow& b) {
    return a.naive_error < b.naive_error;
  });
  return static_cast<std::size_t>(it - rows.begin());
}

std::optional<std::size_t> AuditReport::naive_increasing_from(std::size_t min_length) const {
  if (rows.empty()) return std::nullopt;
  std::size_t start = rows.size() - 1;
  while (start > 0 && rows[start - 1].naive_error < rows[start].naive_error) --start;
  if (rows.size() - start < min_length) return std::nullopt;
  return start;
}

AuditReport cancellation_audit(const Seed& seed, int k_max, int audited_bits, int reference_bits) {
  if (audited_bits < 24) throw UsageError("cancellation_audit: audited_bits must be >= 24");
  if (reference_bits < 4 * audited_bits) {
    throw UsageError("cancellation_audit: reference precision must be >= 4x audited_bits");
  }
  if (k_max < 1) throw DomainError("cancellation_audit: k_max must be >= 1");

  const PrecisionContext ref_ctx(reference_bits, 64);
  const int ref = ref_ctx.working_bits();
  const FixedReal pi = pi_oracle(ref);
  const FixedReal half_ratio = angle_ratio(seed, RatioMode::automatic, ref_ctx).value.mul_pow2(-1);

  const FixedReal x0 = seed.value(audited_bits);
  const FixedReal s0 = seed.sine(audited_bits);
  const HalfAngleTrace naive = half_angle_trace(x0, s0, k_max, SineVariant::naive);
  const HalfAngleTrace stable = half_angle_trace(x0, s0, k_max, SineVariant::stable);

  auto error_of = [&](const FixedReal& chord) {
    return (half_ratio * chord.rescaled(ref) - pi).abs();
  };
  auto digits_of = [](const FixedReal& e) {
    return e.is_zero() ? 0 : correct_digits(e.to_rational());
  };

  const int digits = decimal_digits_for_bits(audited_bits) + kErrorExtraDigits;
  AuditReport report;
  report.audited_bits = audited_bits;
  report.reference_bits = reference_bits;
  for (int k = 1; k <= k_max; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const FixedReal en = error_of(naive.chord[idx]);
    const FixedReal es = error_of(stable.chord[idx]);
    report.rows.push_back(AuditRow{k, en.to_double(), es.to_double(), en.to_decimal(digits),
                                   es.to_decimal(digits), digits_of(es) - digits_of(en)});
  }
  return report;
}

}  // namespace nestrad
