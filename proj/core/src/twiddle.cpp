#include "fmafft/twiddle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fmafft {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_size(std::size_t n) {
  if (n < 2 || !is_power_of_two(n))
    throw std::invalid_argument("FFT size must be a power of two >= 2, got " +
                                std::to_string(n));
}

TwiddleTable make_table(std::size_t n, Strategy s) {
  check_size(n);
  TwiddleTable t;
  t.n = n;
  t.strategy = s;
  t.entries.resize(n / 2);
  return t;
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::standard: return "standard";
    case Strategy::linzer_feig: return "lf";
    case Strategy::cosine: return "cosine";
    case Strategy::dual_select: return "dual";
  }
  return "standard";
}

std::string_view to_string(TwiddlePath p) {
  return p == TwiddlePath::cos ? "COS" : "SIN";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "standard") return Strategy::standard;
  if (name == "lf" || name == "linzer-feig" || name == "linzer_feig")
    return Strategy::linzer_feig;
  if (name == "cosine") return Strategy::cosine;
  if (name == "dual" || name == "dual-select" || name == "dual_select")
    return Strategy::dual_select;
  throw std::invalid_argument("unknown strategy: " + std::string(name));
}

double twiddle_angle(std::size_t k, std::size_t n) {
  return -(2.0 * std::numbers::pi) * (static_cast<double>(k) / static_cast<double>(n));
}

TwiddleTable build_standard_table(std::size_t n) {
  TwiddleTable t = make_table(n, Strategy::standard);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double theta = twiddle_angle(k, n);
    TwiddleEntry& e = t.entries[k];
    e.omega_r = std::cos(theta);
    e.omega_i = std::sin(theta);
    e.multiplier = e.omega_r;
    e.ratio = 0.0;
    e.path = TwiddlePath::cos;
    e.clamped = false;
  }
  return t;
}

TwiddleTable build_linzer_feig_table(std::size_t n, double clamp_eps) {
  if (!(clamp_eps > 0.0))
    throw std::invalid_argument("clamp_eps must be positive");
  TwiddleTable t = make_table(n, Strategy::linzer_feig);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double theta = twiddle_angle(k, n);
    TwiddleEntry& e = t.entries[k];
    e.omega_r = std::cos(theta);
    e.omega_i = std::sin(theta);
    e.path = TwiddlePath::sin;
    if (e.omega_i == 0.0) {  // k = 0 only: sin(-0) == -0
      e.multiplier = -clamp_eps;
      e.ratio = e.omega_r / -clamp_eps;
      e.clamped = true;
    } else {
      e.multiplier = e.omega_i;
      e.ratio = e.omega_r / e.omega_i;
      e.clamped = false;
    }
  }
  return t;
}

TwiddleTable build_cosine_table(std::size_t n) {
  TwiddleTable t = make_table(n, Strategy::cosine);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double theta = twiddle_angle(k, n);
    TwiddleEntry& e = t.entries[k];
    e.omega_r = std::cos(theta);
    e.omega_i = std::sin(theta);
    e.path = TwiddlePath::cos;
    e.multiplier = e.omega_r;
    e.ratio = e.omega_i / e.omega_r;
    e.clamped = false;
  }
  return t;
}

TwiddleTable build_dual_select_table(std::size_t n) {
  TwiddleTable t = make_table(n, Strategy::dual_select);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double theta = twiddle_angle(k, n);
    TwiddleEntry& e = t.entries[k];
    e.omega_r = std::cos(theta);
    e.omega_i = std::sin(theta);
    e.clamped = false;
    if (std::fabs(e.omega_r) >= std::fabs(e.omega_i)) {
      e.path = TwiddlePath::cos;
      e.multiplier = e.omega_r;
      e.ratio = e.omega_i / e.omega_r;
    } else {
      e.path = TwiddlePath::sin;
      e.multiplier = e.omega_i;
      e.ratio = e.omega_r / e.omega_i;
    }
  }
  return t;
}

TwiddleTable build_table(std::size_t n, Strategy s, double clamp_eps) {
  switch (s) {
    case Strategy::standard: return build_standard_table(n);
    case Strategy::linzer_feig: return build_linzer_feig_table(n, clamp_eps);
    case Strategy::cosine: return build_cosine_table(n);
    case Strategy::dual_select: return build_dual_select_table(n);
  }
  throw std::invalid_argument("unknown strategy");
}

RatioStats table_stats(const TwiddleTable& table) {
  RatioStats s;
  for (std::size_t k = 0; k < table.entries.size(); ++k) {
    const TwiddleEntry& e = table.entries[k];
    if (e.path == TwiddlePath::cos)
      ++s.cos_path_count;
    else
      ++s.sin_path_count;
    if (e.clamped) {
      ++s.singular_count;
      continue;
    }
    const double r = std::fabs(e.ratio);
    if (r > s.t_max) {
      s.t_max = r;
      s.argmax_k = k;
    }
  }
  return s;
}

}  // namespace fmafft
