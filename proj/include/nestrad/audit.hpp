#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestrad/seed.hpp"

namespace nestrad {

struct AuditRow {
  int k = 0;
  double naive_error = 0.0;
  double stable_error = 0.0;
  std::string naive_error_text;   // plain decimal
  std::string stable_error_text;
  // correct_digits(stable) - correct_digits(naive)
  int digits_lost = 0;
};

struct AuditReport {
  int audited_bits = 0;
  int reference_bits = 0;
  std::vector<AuditRow> rows;  // k = 1..k_max

  // Index into rows of the smallest naive error (bottom of the U).
  std::size_t naive_argmin() const;
  // Start of the strictly increasing tail of the naive errors, if that tail
  // has at least `min_length` rows.
  std::optional<std::size_t> naive_increasing_from(std::size_t min_length = 4) const;
};

// Runs the naive and the stable recursion at audited_bits (no guard bits) and
// measures the pi approximant R * 2^(k-1) * c_k of each against pi_oracle at
// reference_bits. The angle ratio R is taken at reference precision so that
// only the recursion's own rounding shows.
// UsageError unless audited_bits >= 24 and reference_bits >= 4 * audited_bits.
AuditReport cancellation_audit(const Seed& seed, int k_max, int audited_bits, int reference_bits);

}  // namespace nestrad
