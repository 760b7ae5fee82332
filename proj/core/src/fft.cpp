#include "fmafft/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace fmafft {

namespace {

constexpr std::size_t kMaxFftSize = std::size_t{1} << 24;

void check_length(const FftPlan& plan, const SampleBuffer& buf) {
  if (buf.size() != plan.n)
    throw std::invalid_argument("buffer length " + std::to_string(buf.size()) +
                                " does not match plan size " +
                                std::to_string(plan.n));
}

void check_context(const FftPlan& plan, const ArithmeticContext& ctx) {
  if (ctx.precision() != plan.precision)
    throw std::invalid_argument("context precision does not match plan");
}

// All passes of the Stockham autosort transform. Pass p pairs x[j] with
// x[j + n/2], applies the twiddle at table index (j mod 2^p) * n/2^(p+1),
// and scatters the outputs so that natural order falls out after the last
// pass. Buffers ping-pong; data starts in buf.
SampleBuffer run_passes(const FftPlan& plan, SampleBuffer buf,
                        ArithmeticContext& ctx) {
  const std::size_t n = plan.n;
  const std::size_t half_n = n / 2;
  const ButterflyKernel kernel = kernel_for(plan.strategy);
  SampleBuffer other(n);
  std::size_t block = 1;  // 2^p
  for (unsigned pass = 0; pass < plan.m; ++pass, block <<= 1) {
    const std::size_t stride = n / (2 * block);
    for (std::size_t j = 0; j < half_n; ++j) {
      const std::size_t jq = j & (block - 1);
      const TwiddleEntry& e = plan.table.entries[jq * stride];
      const ButterflyResult r = kernel(buf[j], buf[j + half_n], e, ctx);
      const std::size_t base = ((j >> pass) * 2) * block + jq;
      other[base] = r.sum;
      other[base + block] = r.diff;
    }
    std::swap(buf, other);
  }
  return buf;
}

}  // namespace

FftPlan make_plan(std::size_t n, Strategy strategy, Precision precision) {
  if (n > kMaxFftSize)
    throw std::invalid_argument("FFT size exceeds 2^24");
  FftPlan plan;
  plan.table = build_table(n, strategy);  // validates n
  plan.n = n;
  plan.m = static_cast<unsigned>(std::countr_zero(n));
  plan.strategy = strategy;
  plan.precision = precision;
  for (TwiddleEntry& e : plan.table.entries) {
    e.multiplier = round_to(e.multiplier, precision);
    e.ratio = round_to(e.ratio, precision);
    e.omega_r = round_to(e.omega_r, precision);
    e.omega_i = round_to(e.omega_i, precision);
  }
  return plan;
}

SampleBuffer forward(const FftPlan& plan, const SampleBuffer& input,
                     ArithmeticContext& ctx) {
  check_length(plan, input);
  check_context(plan, ctx);
  SampleBuffer buf(plan.n);
  for (std::size_t i = 0; i < plan.n; ++i) {
    buf[i].re = round_to(input[i].re, plan.precision);
    buf[i].im = round_to(input[i].im, plan.precision);
  }
  return run_passes(plan, std::move(buf), ctx);
}

SampleBuffer inverse(const FftPlan& plan, const SampleBuffer& spectrum,
                     ArithmeticContext& ctx) {
  check_length(plan, spectrum);
  check_context(plan, ctx);
  SampleBuffer buf(plan.n);
  for (std::size_t i = 0; i < plan.n; ++i)
    buf[i] = ComplexSample{spectrum[i].re, -spectrum[i].im};
  buf = forward(plan, buf, ctx);
  const double scale = round_to(1.0 / static_cast<double>(plan.n),
                                plan.precision);  // exact: n is a power of two
  for (ComplexSample& c : buf) {
    c.re = ctx.mul(c.re, scale);
    c.im = ctx.mul(-c.im, scale);
  }
  return buf;
}

SampleBuffer dft_oracle(const SampleBuffer& input) {
  const std::size_t n = input.size();
  SampleBuffer out(n);
  const double two_pi_over_n =
      (2.0 * std::numbers::pi) / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc_re = 0.0, acc_im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double theta =
          -two_pi_over_n * static_cast<double>((j * k) % n);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      acc_re += input[k].re * c - input[k].im * s;
      acc_im += input[k].re * s + input[k].im * c;
    }
    out[j] = ComplexSample{acc_re, acc_im};
  }
  return out;
}

}  // namespace fmafft
