#include "fmafft/precision.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fmafft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Halfway point between the largest finite binary16 value (65504) and the
// first value that overflows (2^16); round-to-nearest-even sends it to inf.
constexpr double kHalfOverflow = 65520.0;
// Same boundary for binary32: (FLT_MAX + 2^128) / 2, exact in double.
constexpr double kFloatOverflow = 0x1.ffffffp+127;

// Round |x| (finite, nonzero, below the overflow boundary) into binary16.
// Normal range keeps 11 significand bits; below 2^-14 the representable
// values are the multiples of 2^-24. std::nearbyint honors the current
// rounding mode, which this library never changes from round-to-nearest-even.
double round_mag_to_binary16(double ax) {
  if (ax < 0x1p-14) {
    if (ax <= 0x1p-25) return 0.0;  // at the tie, even means zero
    return std::nearbyint(ax * 0x1p24) * 0x1p-24;
  }
  int e;
  double m = std::frexp(ax, &e);  // ax = m * 2^e, m in [0.5, 1)
  return std::ldexp(std::nearbyint(m * 0x1p11), e - 11);
}

}  // namespace

double machine_epsilon(Precision p) {
  switch (p) {
    case Precision::fp16: return 0x1p-11;
    case Precision::fp32: return 0x1p-24;
    case Precision::fp64: return 0x1p-53;
  }
  return 0x1p-53;
}

std::string_view to_string(Precision p) {
  switch (p) {
    case Precision::fp16: return "fp16";
    case Precision::fp32: return "fp32";
    case Precision::fp64: return "fp64";
  }
  return "fp64";
}

Precision parse_precision(std::string_view name) {
  if (name == "fp16") return Precision::fp16;
  if (name == "fp32") return Precision::fp32;
  if (name == "fp64") return Precision::fp64;
  throw std::invalid_argument("unknown precision: " + std::string(name));
}

double round_to(double x, Precision p) {
  if (p == Precision::fp64 || x == 0.0 || std::isnan(x)) return x;
  const double ax = std::fabs(x);
  switch (p) {
    case Precision::fp16: {
      if (ax >= kHalfOverflow) return std::copysign(kInf, x);
      return std::copysign(round_mag_to_binary16(ax), x);
    }
    case Precision::fp32: {
      if (ax >= kFloatOverflow) return std::copysign(kInf, x);
      return static_cast<double>(static_cast<float>(x));
    }
    default: return x;
  }
}

double ArithmeticContext::add(double a, double b) {
  ++counters_.add_count;
  if (precision_ == Precision::fp32)
    return static_cast<double>(static_cast<float>(a) + static_cast<float>(b));
  return round_to(a + b, precision_);  // exact in the carrier for fp16
}

double ArithmeticContext::sub(double a, double b) {
  ++counters_.add_count;
  if (precision_ == Precision::fp32)
    return static_cast<double>(static_cast<float>(a) - static_cast<float>(b));
  return round_to(a - b, precision_);
}

double ArithmeticContext::mul(double a, double b) {
  ++counters_.mul_count;
  if (precision_ == Precision::fp32)
    return static_cast<double>(static_cast<float>(a) * static_cast<float>(b));
  return round_to(a * b, precision_);
}

double ArithmeticContext::fma(double a, double b, double c) {
  ++counters_.fma_count;
  switch (precision_) {
    case Precision::fp16:
      return round_to(std::fma(a, b, c), precision_);
    case Precision::fp32:
      return static_cast<double>(std::fmaf(static_cast<float>(a),
                                           static_cast<float>(b),
                                           static_cast<float>(c)));
    case Precision::fp64:
      return std::fma(a, b, c);
  }
  return std::fma(a, b, c);
}

}  // namespace fmafft
