#pragma once

#include <cstddef>
#include <vector>

#include "fmafft/butterfly.hpp"
#include "fmafft/precision.hpp"
#include "fmafft/twiddle.hpp"

namespace fmafft {

using SampleBuffer = std::vector<ComplexSample>;

// Immutable execution recipe. The twiddle table is built in fp64 and every
// stored scalar is rounded once into the working precision, modeling a table
// stored at that precision. Plans are freely shareable across threads.
struct FftPlan {
  std::size_t n = 0;
  unsigned m = 0;  // log2(n)
  Strategy strategy = Strategy::standard;
  Precision precision = Precision::fp64;
  TwiddleTable table;
};

// n must be a power of two in [2, 2^24].
FftPlan make_plan(std::size_t n, Strategy strategy, Precision precision);

// Out-of-place Stockham autosort FFT, decimation in time, natural-order
// input and output. Input samples are rounded into the working precision on
// ingest; every butterfly goes through the plan's strategy kernel and all
// arithmetic is routed through ctx, whose counters can be read afterward.
// ctx must carry the plan's precision.
SampleBuffer forward(const FftPlan& plan, const SampleBuffer& input,
                     ArithmeticContext& ctx);

// Conjugate, forward, conjugate, then scale by 1/n (one rounded
// multiplication per real component; conjugation is exact and uncounted).
SampleBuffer inverse(const FftPlan& plan, const SampleBuffer& spectrum,
                     ArithmeticContext& ctx);

// Direct O(n^2) summation X[j] = sum_k x[k] e^(-2*pi*i*j*k/n), evaluated
// entirely in fp64 with per-element trig (angles reduced through jk mod n).
// Deliberately shares no code with forward; works for any n >= 1.
SampleBuffer dft_oracle(const SampleBuffer& input);

}  // namespace fmafft
