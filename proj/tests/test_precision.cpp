#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "fmafft/analysis.hpp"
#include "fmafft/precision.hpp"
#include "reference_half.hpp"

using namespace fmafft;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

// Mixed-scale random doubles: random 53-bit significand in [1,2) scaled by a
// random exponent, so ties and subnormal/overflow edges actually show up.
double random_scaled(SplitMix64& rng, int min_exp, int max_exp) {
  const double mant = 1.0 + static_cast<double>(rng.next() >> 12) * 0x1p-52;
  const int span = max_exp - min_exp + 1;
  const int e = min_exp + static_cast<int>(rng.next() % std::uint64_t(span));
  const double sign = (rng.next() & 1) ? -1.0 : 1.0;
  return sign * std::ldexp(mant, e);
}

}  // namespace

TEST_CASE("machine epsilon values") {
  CHECK(machine_epsilon(Precision::fp16) == 0x1p-11);
  CHECK(machine_epsilon(Precision::fp32) == 0x1p-24);
  CHECK(machine_epsilon(Precision::fp64) == 0x1p-53);
  // three significant digits
  CHECK(machine_epsilon(Precision::fp16) == doctest::Approx(4.88e-4).epsilon(1e-3));
  CHECK(machine_epsilon(Precision::fp32) == doctest::Approx(5.96e-8).epsilon(1e-3));
}

TEST_CASE("round_to fp16 examples") {
  CHECK(round_to(1.0, Precision::fp16) == 1.0);
  // 2049 is halfway between 2048 and 2050; even significand wins.
  CHECK(round_to(2049.0, Precision::fp16) == 2048.0);
  // Halfway between 1 and 1 + 2^-11 rounds down to the even side.
  CHECK(round_to(1.0 + 0x1p-12, Precision::fp16) == 1.0);
  CHECK(round_to(1.0 + 0x1.8p-11, Precision::fp16) == 1.0 + 0x1p-10);  // ties to even, up
  // Overflow saturates to infinity at the 65520 boundary.
  CHECK(round_to(65504.0, Precision::fp16) == 65504.0);
  CHECK(round_to(65519.9, Precision::fp16) == 65504.0);
  CHECK(round_to(65520.0, Precision::fp16) == kInf);
  CHECK(round_to(-1e7, Precision::fp16) == -kInf);
  // Subnormals.
  CHECK(round_to(0x1p-24, Precision::fp16) == 0x1p-24);
  CHECK(round_to(0x1p-25, Precision::fp16) == 0.0);
  CHECK(round_to(0x1.8p-24, Precision::fp16) == 0x1p-23);  // tie, even
  CHECK(round_to(1e-7, Precision::fp16) == 0x1p-23);
  // Specials.
  CHECK(std::isnan(round_to(std::nan(""), Precision::fp16)));
  CHECK(round_to(kInf, Precision::fp16) == kInf);
  CHECK(same_bits(round_to(-0.0, Precision::fp16), -0.0));
}

TEST_CASE("round_to fp32 and fp64") {
  CHECK(round_to(0.1, Precision::fp32) == double(0.1f));
  CHECK(round_to(0.1, Precision::fp64) == 0.1);
  CHECK(round_to(1e300, Precision::fp32) == kInf);
  CHECK(round_to(-1e300, Precision::fp32) == -kInf);
  CHECK(round_to(1e-300, Precision::fp32) == 0.0);
  CHECK(same_bits(round_to(-1e-300, Precision::fp32), -0.0));
}

TEST_CASE("round_to idempotence and monotonicity") {
  SplitMix64 rng(2024);
  for (Precision p : {Precision::fp16, Precision::fp32, Precision::fp64}) {
    double prev_x = -kInf, prev_r = -kInf;
    for (int i = 0; i < 20000; ++i) {
      const double x = random_scaled(rng, -30, 20);
      const double r = round_to(x, p);
      CHECK(same_bits(round_to(r, p), r));
      // monotone: feed an ordered pair
      if (x >= prev_x) CHECK(r >= prev_r);
      if (x < prev_x) CHECK(r <= prev_r);
      prev_x = x;
      prev_r = r;
    }
  }
}

TEST_CASE("fp16 conversion is bit-exact against the reference") {
  SplitMix64 rng(42);
  for (int i = 0; i < 100000; ++i) {
    const double x = random_scaled(rng, -30, 20);
    const double got = round_to(x, Precision::fp16);
    const double want = refhalf::round_to_half(x);
    CHECK_MESSAGE(same_bits(got, want),
                  "x=", x, " got=", got, " want=", want);
  }
  // Deliberate edge sweep around every binary16 value: x, midpoints, nudges.
  for (std::uint32_t h = 0; h < 0x8000u; ++h) {
    const double v = refhalf::half_bits_to_double(std::uint16_t(h));
    if (!std::isfinite(v)) continue;
    for (double nudge : {0.0, 0x1p-30, -0x1p-30}) {
      const double x = v + nudge * std::fmax(1.0, std::fabs(v));
      CHECK(same_bits(round_to(x, Precision::fp16), refhalf::round_to_half(x)));
      CHECK(same_bits(round_to(-x, Precision::fp16), refhalf::round_to_half(-x)));
    }
  }
}

TEST_CASE("context results stay representable") {
  SplitMix64 rng(7);
  for (Precision p : {Precision::fp16, Precision::fp32}) {
    ArithmeticContext ctx(p);
    for (int i = 0; i < 5000; ++i) {
      const double a = round_to(random_scaled(rng, -10, 8), p);
      const double b = round_to(random_scaled(rng, -10, 8), p);
      const double c = round_to(random_scaled(rng, -10, 8), p);
      for (double r : {ctx.add(a, b), ctx.sub(a, b), ctx.mul(a, b),
                       ctx.fma(a, b, c)}) {
        CHECK(same_bits(round_to(r, p), r));
      }
    }
  }
}

TEST_CASE("exactness window: representable results untouched") {
  ArithmeticContext h(Precision::fp16);
  CHECK(h.add(1.0, 1.0) == 2.0);
  CHECK(h.sub(3.0, 0.5) == 2.5);
  CHECK(h.mul(1.5, 2.0) == 3.0);
  CHECK(h.fma(3.0, 4.0, 5.0) == 17.0);
  // 2048 + 1 = 2049 ties back to even 2048 in binary16.
  CHECK(h.add(2048.0, 1.0) == 2048.0);

  ArithmeticContext d(Precision::fp64);
  CHECK(d.fma(3.0, 4.0, 5.0) == 17.0);
  // Table-style product: rounds to 7.95e-2 at three significant digits.
  const double prod = d.mul(163.0, 4.88e-4);
  CHECK(prod == doctest::Approx(7.95e-2).epsilon(1e-3));
}

TEST_CASE("fma_rounded single rounding") {
  ArithmeticContext h(Precision::fp16);
  CHECK(h.fma(0.0, 0.0, 3.5) == 3.5);
  // Exact value 1 + 2^-12 ties to even: a correctly rounded fused operation
  // gives 1.0, while multiply-then-add would already have lost the term.
  CHECK(h.fma(1.0, 0x1p-12, 1.0) == 1.0);
  CHECK(h.fma(1.0, 0x1.8p-11, 1.0) == 1.0 + 0x1p-10);

  // fp32: product needs more than 24 bits; the fused op must not round it.
  ArithmeticContext s(Precision::fp32);
  const double a = 1.0 + 0x1p-23, b = 1.0 + 0x1p-23;
  // a*b = 1 + 2^-22 + 2^-46 exactly; adding -(1 + 2^-22) leaves 2^-46.
  CHECK(s.fma(a, b, -(1.0 + 0x1p-22)) == 0x1p-46);

  // fp64 fused behavior via the native fma.
  ArithmeticContext d(Precision::fp64);
  const double x = 1.0 + 0x1p-52;
  CHECK(d.fma(x, x, -(1.0 + 0x1p-51)) == 0x1p-104);
}

TEST_CASE("counters count") {
  ArithmeticContext ctx(Precision::fp64);
  CHECK(ctx.counters().fma_count == 0);
  for (int i = 0; i < 17; ++i) ctx.fma(1.0, 2.0, 3.0);
  CHECK(ctx.counters().fma_count == 17);
  CHECK(ctx.counters().add_count == 0);
  CHECK(ctx.counters().mul_count == 0);
  ctx.add(1.0, 2.0);
  ctx.sub(1.0, 2.0);
  ctx.mul(1.0, 2.0);
  CHECK(ctx.counters().add_count == 2);  // sub counts as an addition
  CHECK(ctx.counters().mul_count == 1);
  ctx.reset_counters();
  CHECK(ctx.counters().fma_count == 0);
  CHECK(ctx.counters().add_count == 0);
  CHECK(ctx.counters().mul_count == 0);
}

TEST_CASE("IEEE specials propagate") {
  ArithmeticContext h(Precision::fp16);
  CHECK(h.add(kInf, 1.0) == kInf);
  CHECK(std::isnan(h.add(kInf, -kInf)));
  CHECK(std::isnan(h.mul(0.0, kInf)));
  CHECK(h.fma(2.0, kInf, 1.0) == kInf);
  CHECK(std::isnan(h.fma(std::nan(""), 1.0, 1.0)));
}
