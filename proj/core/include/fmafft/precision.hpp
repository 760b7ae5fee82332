#pragma once

#include <cstdint>
#include <string_view>

namespace fmafft {

// Working precision of the emulated arithmetic. Values are always carried in
// a native double ("the carrier"); a working precision narrower than fp64
// means every operation result is rounded into that format (round to nearest,
// ties to even) and then widened back to the carrier.
enum class Precision { fp16, fp32, fp64 };

// Unit roundoff: 2^-11 for fp16, 2^-24 for fp32, 2^-53 for fp64.
double machine_epsilon(Precision p);

std::string_view to_string(Precision p);
Precision parse_precision(std::string_view name);  // throws std::invalid_argument

// Rounds x to the nearest value representable in p (ties to even) and returns
// it widened to double. Total over the extended reals: overflow gives signed
// infinity, subnormals are kept, NaN stays NaN, signed zero is preserved.
double round_to(double x, Precision p);

struct OpCounter {
  std::uint64_t fma_count = 0;
  std::uint64_t add_count = 0;  // additions and subtractions
  std::uint64_t mul_count = 0;

  void reset() { fma_count = add_count = mul_count = 0; }
};

// Rounded-arithmetic provider. Each operation computes the exact result of
// its IEEE operation at the working precision (exactly one rounding) and
// bumps the matching counter. Operands are expected to be representable in
// the working precision already; results always are.
//
// A context is single-owner mutable (the counters); everything else is pure.
class ArithmeticContext {
 public:
  explicit ArithmeticContext(Precision p) : precision_(p) {}

  Precision precision() const { return precision_; }
  const OpCounter& counters() const { return counters_; }
  void reset_counters() { counters_.reset(); }

  double add(double a, double b);
  double sub(double a, double b);
  double mul(double a, double b);

  // a*b + c with a single rounding into the working precision.
  //
  // fp16: the double product a*b is exact (11-bit significands) and the final
  // add rounds once to double; re-rounding that into binary16 is proven free
  // of double-rounding for binary16 operands, so the result is the correctly
  // rounded binary16 FMA. fp32 and fp64 use the platform's fused operation.
  double fma(double a, double b, double c);

 private:
  Precision precision_;
  OpCounter counters_;
};

}  // namespace fmafft
