#pragma once

namespace nestrad {

// Requested precision plus internal guard bits.
//
// scale_bits is what the caller asks for: decimal output and the documented
// error tolerances 2^(-B + ...) refer to it. Computation runs at
// working_bits() = scale_bits + guard_bits. A recursion of depth k is
// admissible while k <= (working_bits - 64) / 2.
class PrecisionContext {
 public:
  static constexpr int kMinScaleBits = 64;
  static constexpr int kMinGuardBits = 32;

  PrecisionContext(int scale_bits, int guard_bits);

  // guard_bits = 2 * k_max + 64: the final 2^k scaling costs k bits and the
  // naive radicand cancellation costs up to k more.
  static PrecisionContext for_depth(int scale_bits, int k_max);

  int scale_bits() const { return scale_bits_; }
  int guard_bits() const { return guard_bits_; }
  int working_bits() const { return scale_bits_ + guard_bits_; }
  int recursion_budget() const { return (working_bits() - 64) / 2; }

  // Same scale_bits, guard raised (never lowered) to admit depth k_max.
  PrecisionContext widened_for(int k_max) const;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int scale_bits_;
  int guard_bits_;
};

// Guard rule: the default guard for a recursion depth.
int default_guard_bits(int k_max);

}  // namespace nestrad
