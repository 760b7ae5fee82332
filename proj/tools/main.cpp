// fmafft command-line front end: twiddle table dumps, ratio statistics,
// analytic error bounds, measured-error reports, and the verification suite.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fmafft/analysis.hpp"
#include "fmafft/fft.hpp"
#include "fmafft/serialize.hpp"

namespace {

using namespace fmafft;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

enum class Format { csv, json, human };

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "human") return Format::human;
  throw CLI::ValidationError("--format", "expected csv, json or human");
}

int cmd_twiddles(std::size_t n, const std::string& strategy, double clamp_eps,
                 Format format) {
  const TwiddleTable table = build_table(n, parse_strategy(strategy), clamp_eps);
  if (format == Format::json)
    write_table_json(std::cout, table);
  else
    write_table_csv(std::cout, table);  // human == csv for a table dump
  return kExitOk;
}

int cmd_stats(std::size_t n, Format format) {
  const std::vector<BoundReport> rows = reproduce_ratio_table(n);
  switch (format) {
    case Format::csv: write_bounds_csv(std::cout, rows); break;
    case Format::json: write_bounds_json(std::cout, rows); break;
    case Format::human: write_bounds_human(std::cout, rows); break;
  }
  return kExitOk;
}

int cmd_bounds(std::size_t n, const std::string& precision, Format format) {
  const std::vector<BoundReport> rows =
      reproduce_cumulative_table(n, parse_precision(precision));
  switch (format) {
    case Format::csv: write_bounds_csv(std::cout, rows); break;
    case Format::json: write_bounds_json(std::cout, rows); break;
    case Format::human: write_bounds_human(std::cout, rows); break;
  }
  return kExitOk;
}

int cmd_error(std::size_t n, const std::string& strategy,
              const std::string& precision, const std::string& metric,
              std::size_t trials, std::uint64_t seed, Format format) {
  const ErrorReport report =
      measure_error(n, parse_strategy(strategy), parse_precision(precision),
                    parse_metric(metric), trials, seed);
  switch (format) {
    case Format::csv: write_error_csv(std::cout, report); break;
    case Format::json: write_error_json(std::cout, report); break;
    case Format::human: write_error_human(std::cout, report); break;
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct CheckResult {
  bool ok = true;
  std::string detail;
};

CheckResult check_dual_ratio_bound(std::size_t max_n) {
  CheckResult res;
  double worst = 0.0;
  std::size_t entries = 0;
  for (std::size_t n = 2; n <= max_n; n <<= 1) {
    const TwiddleTable t = build_dual_select_table(n);
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
      ++entries;
      const double r = std::fabs(t.entries[k].ratio);
      worst = std::fmax(worst, r);
      if (r > 1.0 || t.entries[k].clamped) {
        res.ok = false;
        res.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " ratio=" + format_double(t.entries[k].ratio);
        return res;
      }
    }
  }
  res.detail = "n up to " + std::to_string(max_n) + ", " +
               std::to_string(entries) + " entries, max|ratio|=" +
               format_double(worst);
  return res;
}

CheckResult check_oracle_equivalence(std::size_t max_n) {
  constexpr double kTol = 1e-11;
  CheckResult res;
  const std::size_t cap = std::min<std::size_t>(max_n, 4096);
  const Strategy strategies[] = {Strategy::standard, Strategy::linzer_feig,
                                 Strategy::cosine, Strategy::dual_select};
  double worst = 0.0;
  for (std::size_t n = 2; n <= cap; n <<= 1) {
    SplitMix64 rng(0x5eedull + n);
    SampleBuffer x(n);
    for (ComplexSample& c : x) {
      c.re = rng.uniform_pm1();
      c.im = rng.uniform_pm1();
    }
    const SampleBuffer ref = dft_oracle(x);
    for (Strategy s : strategies) {
      const FftPlan plan = make_plan(n, s, Precision::fp64);
      ArithmeticContext ctx(Precision::fp64);
      const double err = relative_l2_error(forward(plan, x, ctx), ref);
      worst = std::fmax(worst, err);
      if (!(err < kTol)) {
        res.ok = false;
        res.detail = "strategy=" + std::string(to_string(s)) +
                     " n=" + std::to_string(n) +
                     " rel_l2=" + format_double(err) + " tol=1e-11";
        return res;
      }
    }
  }
  res.detail = "n up to " + std::to_string(cap) +
               ", 4 strategies, worst rel_l2=" + format_double(worst) +
               " (tol 1e-11)";
  return res;
}

CheckResult check_operation_counts(std::size_t n) {
  CheckResult res;
  const std::uint64_t butterflies =
      std::uint64_t(n / 2) * std::uint64_t(std::countr_zero(n));
  SplitMix64 rng(7);
  SampleBuffer x(n);
  for (ComplexSample& c : x) {
    c.re = rng.uniform_pm1();
    c.im = rng.uniform_pm1();
  }
  const Strategy fma_strategies[] = {Strategy::linzer_feig, Strategy::cosine,
                                     Strategy::dual_select};
  for (Strategy s : fma_strategies) {
    ArithmeticContext ctx(Precision::fp64);
    forward(make_plan(n, s, Precision::fp64), x, ctx);
    const OpCounter& c = ctx.counters();
    if (c.fma_count != 6 * butterflies || c.mul_count != 0 ||
        c.add_count != 0) {
      res.ok = false;
      res.detail = "strategy=" + std::string(to_string(s)) +
                   " n=" + std::to_string(n) +
                   " fma=" + std::to_string(c.fma_count) +
                   " mul=" + std::to_string(c.mul_count) +
                   " add=" + std::to_string(c.add_count) + " expected fma=" +
                   std::to_string(6 * butterflies) + " mul=0 add=0";
      return res;
    }
  }
  ArithmeticContext ctx(Precision::fp64);
  forward(make_plan(n, Strategy::standard, Precision::fp64), x, ctx);
  const OpCounter& c = ctx.counters();
  if (c.mul_count != 4 * butterflies || c.add_count != 6 * butterflies ||
      c.fma_count != 0) {
    res.ok = false;
    res.detail = "strategy=standard n=" + std::to_string(n) +
                 " mul=" + std::to_string(c.mul_count) +
                 " add=" + std::to_string(c.add_count) +
                 " fma=" + std::to_string(c.fma_count);
    return res;
  }
  res.detail = "n=" + std::to_string(n) + ": 6-FMA kernels at " +
               std::to_string(6 * butterflies) +
               " FMAs, standard at 4/6 mul/add per butterfly";
  return res;
}

int cmd_verify(std::size_t max_n) {
  if (max_n < 2 || (max_n & (max_n - 1)) != 0)
    throw std::invalid_argument("--max-n must be a power of two >= 2, got " +
                                std::to_string(max_n));
  struct Check {
    const char* name;
    CheckResult result;
  };
  const Check checks[] = {
      {"dual_ratio_bound", check_dual_ratio_bound(max_n)},
      {"oracle_equivalence_fp64", check_oracle_equivalence(max_n)},
      {"operation_counts", check_operation_counts(std::min<std::size_t>(max_n, 1024))},
  };
  bool all_ok = true;
  for (const Check& c : checks) {
    std::cout << (c.result.ok ? "PASS " : "FAIL ") << c.name << " ("
              << c.result.detail << ")\n";
    all_ok = all_ok && c.result.ok;
  }
  return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radix-2 Stockham FFT with FMA butterfly kernels and "
               "precision-analysis tooling"};
  app.require_subcommand(1);

  std::size_t n = 1024;
  std::size_t max_n = 1024;
  std::string strategy = "dual";
  std::string precision = "fp32";
  std::string metric = "roundtrip";
  std::string format_name = "human";
  double clamp_eps = 1e-7;
  std::size_t trials = 100;
  std::uint64_t seed = 42;

  CLI::App* twiddles = app.add_subcommand("twiddles", "dump a twiddle table");
  twiddles->add_option("--n", n, "FFT size (power of two)")->required();
  twiddles->add_option("--strategy", strategy,
                       "standard | lf | cosine | dual");
  twiddles->add_option("--clamp-eps", clamp_eps,
                       "singularity clamp for the lf strategy");
  twiddles->add_option("--format", format_name, "csv | json | human");

  CLI::App* stats = app.add_subcommand(
      "stats", "ratio bounds and singularity counts per strategy");
  stats->add_option("--n", n, "FFT size (power of two)")->required();
  stats->add_option("--format", format_name, "csv | json | human");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "cumulative error bounds over log2(n) passes");
  bounds->add_option("--n", n, "FFT size (power of two)")->required();
  bounds->add_option("--precision", precision, "fp16 | fp32 | fp64");
  bounds->add_option("--format", format_name, "csv | json | human");

  CLI::App* error_cmd =
      app.add_subcommand("error", "measure real transform error");
  error_cmd->add_option("--n", n, "FFT size (power of two)")->required();
  error_cmd->add_option("--strategy", strategy, "standard | lf | cosine | dual");
  error_cmd->add_option("--precision", precision, "fp16 | fp32 | fp64");
  error_cmd->add_option("--metric", metric, "roundtrip | forward");
  error_cmd->add_option("--trials", trials, "number of random inputs");
  error_cmd->add_option("--seed", seed, "generator seed");
  error_cmd->add_option("--format", format_name, "csv | json | human");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the built-in verification suite (ratio bound, fp64 "
                "oracle equivalence, operation counts)");
  verify->add_option("--max-n", max_n, "largest FFT size to check")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (twiddles->parsed()) return cmd_twiddles(n, strategy, clamp_eps, format);
    if (stats->parsed()) return cmd_stats(n, format);
    if (bounds->parsed()) return cmd_bounds(n, precision, format);
    if (error_cmd->parsed())
      return cmd_error(n, strategy, precision, metric, trials, seed, format);
    if (verify->parsed()) return cmd_verify(max_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
