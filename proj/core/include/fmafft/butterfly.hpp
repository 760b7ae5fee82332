#pragma once

#include "fmafft/precision.hpp"
#include "fmafft/twiddle.hpp"

namespace fmafft {

struct ComplexSample {
  double re = 0.0;
  double im = 0.0;
};

// Outputs of the radix-2 butterfly A = a + W*b, B = a - W*b.
struct ButterflyResult {
  ComplexSample sum;   // A
  ComplexSample diff;  // B
};

// Textbook expansion: the four shared products omega_r*b_r, omega_i*b_i,
// omega_i*b_r, omega_r*b_i are formed once, then combined. Costs exactly
// 4 multiplications and 6 additions/subtractions on the context.
ButterflyResult butterfly_standard(const ComplexSample& a,
                                   const ComplexSample& b,
                                   const TwiddleEntry& entry,
                                   ArithmeticContext& ctx);

// Sine-path factorization: with t = omega_r/omega_i,
//   s1 = b_i - t*b_r, s2 = b_r + t*b_i,
//   A = (a_r - s1*omega_i, a_i + s2*omega_i),
//   B = (a_r + s1*omega_i, a_i - s2*omega_i).
// Exactly 6 fused multiply-adds; operand negations are exact sign flips and
// are not counted. A clamped entry (k = 0, where omega_r is exactly 1) is
// computed through the mirrored cosine form on the entry's true
// (omega_r, omega_i) pair, which is still 6 FMAs and keeps the identity
// twiddle exact instead of multiplying through the clamp substitute.
ButterflyResult butterfly_linzer_feig(const ComplexSample& a,
                                      const ComplexSample& b,
                                      const TwiddleEntry& entry,
                                      ArithmeticContext& ctx);

// Cosine-path factorization: with t = omega_i/omega_r,
//   s1 = b_r - t*b_i, s2 = t*b_r + b_i,
//   A = (a_r + s1*omega_r, a_i + s2*omega_r),
//   B = (a_r - s1*omega_r, a_i - s2*omega_r).
// Exactly 6 fused multiply-adds.
ButterflyResult butterfly_cosine(const ComplexSample& a,
                                 const ComplexSample& b,
                                 const TwiddleEntry& entry,
                                 ArithmeticContext& ctx);

// Branches on the entry's path flag into one of the two 6-FMA kernels.
ButterflyResult butterfly_dual(const ComplexSample& a, const ComplexSample& b,
                               const TwiddleEntry& entry,
                               ArithmeticContext& ctx);

using ButterflyKernel = ButterflyResult (*)(const ComplexSample&,
                                            const ComplexSample&,
                                            const TwiddleEntry&,
                                            ArithmeticContext&);

ButterflyKernel kernel_for(Strategy s);

}  // namespace fmafft
