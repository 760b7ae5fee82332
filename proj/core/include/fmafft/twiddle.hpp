#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace fmafft {

// Which factorization a table entry uses. COS entries store the outer
// multiplier omega_r with ratio tan(theta) = omega_i/omega_r; SIN entries
// store omega_i with ratio cot(theta) = omega_r/omega_i.
enum class TwiddlePath { cos, sin };

enum class Strategy { standard, linzer_feig, cosine, dual_select };

std::string_view to_string(Strategy s);
std::string_view to_string(TwiddlePath p);
Strategy parse_strategy(std::string_view name);  // throws std::invalid_argument

// One precomputed twiddle record for W^k = e^(-2*pi*i*k/n).
//
// omega_r/omega_i always hold the directly evaluated cos/sin of the twiddle
// angle. For a clamped entry (Linzer-Feig at k = 0, where sin is exactly
// zero) the multiplier holds the clamp substitute and the ratio is the
// division by it; omega_i keeps the true value.
struct TwiddleEntry {
  double multiplier = 0.0;
  double ratio = 0.0;
  TwiddlePath path = TwiddlePath::cos;
  double omega_r = 0.0;
  double omega_i = 0.0;
  bool clamped = false;
};

// All n/2 entries for one FFT size and strategy; entry k corresponds to
// theta_k = -2*pi*k/n. Immutable after construction, safe to share.
struct TwiddleTable {
  std::size_t n = 0;
  Strategy strategy = Strategy::standard;
  std::vector<TwiddleEntry> entries;
};

// theta_k = -2*pi*(k/n); k/n is exact for power-of-two n, so the angle
// carries a single rounding.
double twiddle_angle(std::size_t k, std::size_t n);

// Raw (omega_r, omega_i) pairs; ratio and path are unused.
TwiddleTable build_standard_table(std::size_t n);

// Sine-path factorization for every k. The k = 0 entry has sin(theta) = 0
// exactly; its omega_i is replaced by -clamp_eps before the division (the
// sign of sin as theta -> 0 under the negative-angle convention) and the
// entry is marked clamped.
TwiddleTable build_linzer_feig_table(std::size_t n, double clamp_eps = 1e-7);

// Cosine-path factorization for every k. Never clamps: at k = n/4 the
// evaluated cos is a tiny nonzero number, so the ratio is finite but huge.
TwiddleTable build_cosine_table(std::size_t n);

// Per-entry selection: whichever component is larger in magnitude becomes
// the outer multiplier (ties go to the cosine path), so every stored ratio
// satisfies |ratio| <= 1 and no clamping is ever needed.
TwiddleTable build_dual_select_table(std::size_t n);

TwiddleTable build_table(std::size_t n, Strategy s, double clamp_eps = 1e-7);

struct RatioStats {
  double t_max = 0.0;              // max |ratio| over non-clamped entries
  std::size_t argmax_k = 0;        // smallest k attaining t_max
  std::size_t singular_count = 0;  // entries that required clamping
  std::size_t cos_path_count = 0;
  std::size_t sin_path_count = 0;
};

RatioStats table_stats(const TwiddleTable& table);

}  // namespace fmafft
