#include "nestrad/precision.hpp"

#include <algorithm>
#include <string>

#include "nestrad/errors.hpp"

namespace nestrad {

int default_guard_bits(int k_max) { return 2 * std::max(k_max, 0) + 64; }

PrecisionContext::PrecisionContext(int scale_bits, int guard_bits)
    : scale_bits_(scale_bits), guard_bits_(guard_bits) {
  if (scale_bits < kMinScaleBits) {
    throw UsageError("precision: scale_bits must be >= 64, got " + std::to_string(scale_bits));
  }
  if (guard_bits < kMinGuardBits) {
    throw UsageError("precision: guard_bits must be >= 32, got " + std::to_string(guard_bits));
  }
}

PrecisionContext PrecisionContext::for_depth(int scale_bits, int k_max) {
  return PrecisionContext(scale_bits, default_guard_bits(k_max));
}

PrecisionContext PrecisionContext::widened_for(int k_max) const {
  // budget = (B + G - 64) / 2 >= k_max  <=>  G >= 2 k_max + 64 - B.
  int needed = 2 * k_max + 64 - scale_bits_;
  return PrecisionContext(scale_bits_, std::max(guard_bits_, needed));
}

}  // namespace nestrad
