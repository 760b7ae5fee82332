#include "fmafft/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fmafft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double median_of(std::vector<double> v) {
  if (v.empty()) return kInf;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return (v[mid - 1] + v[mid]) / 2.0;
}

BoundReport report_for(const TwiddleTable& table, double eps, unsigned m) {
  const RatioStats s = table_stats(table);
  BoundReport r;
  r.strategy = table.strategy;
  r.t_max = s.t_max;
  r.argmax_k = s.argmax_k;
  r.singular_count = s.singular_count;
  r.cos_path_count = s.cos_path_count;
  r.sin_path_count = s.sin_path_count;
  r.per_butterfly_bound = per_butterfly_bound(s.t_max, eps);
  r.cumulative_bound = cumulative_bound(s.t_max, eps, m);
  r.divergent = r.per_butterfly_bound >= 1.0;
  return r;
}

}  // namespace

double relative_l2_error(const SampleBuffer& x, const SampleBuffer& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("relative_l2_error: length mismatch");
  double num = 0.0, den = 0.0;
  bool finite = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i].re) || !std::isfinite(x[i].im)) finite = false;
    const double dr = x[i].re - y[i].re;
    const double di = x[i].im - y[i].im;
    num += dr * dr + di * di;
    den += y[i].re * y[i].re + y[i].im * y[i].im;
  }
  if (den == 0.0)
    throw std::invalid_argument("relative_l2_error: all-zero reference");
  if (!finite) return kInf;
  return std::sqrt(num / den);
}

double per_butterfly_bound(double t_max, double eps) { return t_max * eps; }

double cumulative_bound(double t_max, double eps, unsigned m) {
  return std::pow(1.0 + t_max * eps, static_cast<double>(m)) - 1.0;
}

std::vector<BoundReport> reproduce_ratio_table(std::size_t n) {
  const double eps = machine_epsilon(Precision::fp16);
  const unsigned m = static_cast<unsigned>(std::countr_zero(n));
  std::vector<BoundReport> rows;
  rows.push_back(report_for(build_linzer_feig_table(n), eps, m));
  rows.push_back(report_for(build_cosine_table(n), eps, m));
  rows.push_back(report_for(build_dual_select_table(n), eps, m));
  const double baseline = rows.front().cumulative_bound;
  for (std::size_t i = 1; i < rows.size(); ++i)
    rows[i].improvement_vs_baseline = baseline / rows[i].cumulative_bound;
  return rows;  // the first row is the baseline, improvement 1 by definition
}

std::vector<BoundReport> reproduce_cumulative_table(std::size_t n,
                                                    Precision precision) {
  const double eps = machine_epsilon(precision);
  const unsigned m = static_cast<unsigned>(std::countr_zero(n));
  std::vector<BoundReport> rows;
  rows.push_back(report_for(build_linzer_feig_table(n), eps, m));
  rows.push_back(report_for(build_dual_select_table(n), eps, m));
  rows[1].improvement_vs_baseline =
      rows[0].cumulative_bound / rows[1].cumulative_bound;
  return rows;
}

std::string_view to_string(ErrorMetric m) {
  return m == ErrorMetric::roundtrip ? "roundtrip" : "forward_vs_oracle";
}

ErrorMetric parse_metric(std::string_view name) {
  if (name == "roundtrip") return ErrorMetric::roundtrip;
  if (name == "forward" || name == "forward_vs_oracle")
    return ErrorMetric::forward_vs_oracle;
  throw std::invalid_argument("unknown metric: " + std::string(name));
}

ErrorReport measure_error(std::size_t n, Strategy strategy, Precision precision,
                          ErrorMetric metric, std::size_t trials,
                          std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const FftPlan plan = make_plan(n, strategy, precision);
  SplitMix64 rng(seed);

  ErrorReport report;
  report.n = n;
  report.strategy = strategy;
  report.precision = precision;
  report.metric = metric;
  report.trials = trials;
  report.seed = seed;

  std::vector<double> finite_errors;
  finite_errors.reserve(trials);
  double max_err = 0.0;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    SampleBuffer x(n);
    for (ComplexSample& c : x) {
      c.re = rng.uniform_pm1();
      c.im = rng.uniform_pm1();
    }
    SampleBuffer ingested(n);
    for (std::size_t i = 0; i < n; ++i) {
      ingested[i].re = round_to(x[i].re, precision);
      ingested[i].im = round_to(x[i].im, precision);
    }

    ArithmeticContext ctx(precision);
    double err;
    if (metric == ErrorMetric::roundtrip) {
      const SampleBuffer back = inverse(plan, forward(plan, x, ctx), ctx);
      err = relative_l2_error(back, ingested);
    } else {
      const SampleBuffer spectrum = forward(plan, x, ctx);
      err = relative_l2_error(spectrum, dft_oracle(ingested));
    }

    if (std::isfinite(err)) {
      finite_errors.push_back(err);
      max_err = std::max(max_err, err);
    } else {
      ++report.nonfinite_trials;
      max_err = kInf;
    }
  }

  report.rel_l2_median = median_of(std::move(finite_errors));
  report.rel_l2_max = report.nonfinite_trials > 0 ? kInf : max_err;
  return report;
}

}  // namespace fmafft
