#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fmafft/fft.hpp"
#include "fmafft/precision.hpp"
#include "fmafft/twiddle.hpp"

namespace fmafft {

// ||x - y||_2 / ||y||_2 with y the reference. Returns +inf when x contains a
// non-finite component. Throws on length mismatch or an all-zero reference.
double relative_l2_error(const SampleBuffer& x, const SampleBuffer& y);

// Worst-case rounding amplification of one butterfly: t_max * eps.
double per_butterfly_bound(double t_max, double eps);

// Worst-case growth over m passes: (1 + t_max*eps)^m - 1, evaluated in the
// exact power form rather than the m*t*eps linearization.
double cumulative_bound(double t_max, double eps, unsigned m);

// One analytic row per strategy; all inputs derive from table_stats and the
// precision's epsilon, never from literal reference values.
struct BoundReport {
  Strategy strategy = Strategy::standard;
  double t_max = 0.0;
  std::size_t argmax_k = 0;
  std::size_t singular_count = 0;
  std::size_t cos_path_count = 0;
  std::size_t sin_path_count = 0;
  double per_butterfly_bound = 0.0;
  double cumulative_bound = 0.0;
  double improvement_vs_baseline = 1.0;  // baseline cumulative / own cumulative
  bool divergent = false;                // t_max * eps >= 1
};

// Ratio/singularity statistics and per-butterfly fp16 bounds for the three
// factorized strategies (sine-path, cosine-path, dual-select order).
std::vector<BoundReport> reproduce_ratio_table(std::size_t n);

// Cumulative bounds over log2(n) passes for the sine-path and dual-select
// strategies at the given precision; improvement is measured against the
// sine-path row.
std::vector<BoundReport> reproduce_cumulative_table(
    std::size_t n, Precision precision = Precision::fp16);

enum class ErrorMetric { roundtrip, forward_vs_oracle };

std::string_view to_string(ErrorMetric m);
ErrorMetric parse_metric(std::string_view name);  // throws std::invalid_argument

// Measured error figures for one (n, strategy, precision) configuration.
// Non-finite trials (overflow blowups in low precision) are tallied apart
// and excluded from the median; a non-finite trial forces rel_l2_max to
// +inf. With no finite trials both statistics are +inf.
struct ErrorReport {
  std::size_t n = 0;
  Strategy strategy = Strategy::standard;
  Precision precision = Precision::fp64;
  ErrorMetric metric = ErrorMetric::roundtrip;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double rel_l2_median = 0.0;
  double rel_l2_max = 0.0;
  std::size_t nonfinite_trials = 0;
};

// Deterministic 64-bit generator (splitmix64: golden-gamma increment
// 0x9E3779B97F4A7C15, finalizer constants 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [-1, 1): top 53 bits scaled to [0,1), then 2u - 1 (exact).
  double uniform_pm1() {
    return 2.0 * (static_cast<double>(next() >> 11) * 0x1p-53) - 1.0;
  }

 private:
  std::uint64_t state_;
};

// Runs `trials` seeded random inputs (components uniform in [-1, 1), drawn
// re-then-im in sample order from one SplitMix64 stream) through the plan.
// roundtrip compares inverse(forward(x)) against the precision-ingested
// original; forward_vs_oracle compares forward(x) against dft_oracle of the
// ingested input. Equal arguments give bit-identical reports.
ErrorReport measure_error(std::size_t n, Strategy strategy, Precision precision,
                          ErrorMetric metric, std::size_t trials,
                          std::uint64_t seed);

}  // namespace fmafft
