#include "fmafft/serialize.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace fmafft {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const char* bool_name(bool b) { return b ? "true" : "false"; }

std::string pretty_strategy(Strategy s) {
  switch (s) {
    case Strategy::standard: return "Standard";
    case Strategy::linzer_feig: return "Linzer-Feig";
    case Strategy::cosine: return "Cosine";
    case Strategy::dual_select: return "Dual-Select";
  }
  return "?";
}

ordered_json bound_row_json(const BoundReport& r) {
  return ordered_json{{"strategy", to_string(r.strategy)},
                      {"t_max", r.t_max},
                      {"argmax_k", r.argmax_k},
                      {"singular_count", r.singular_count},
                      {"cos_path_count", r.cos_path_count},
                      {"sin_path_count", r.sin_path_count},
                      {"per_butterfly_bound", r.per_butterfly_bound},
                      {"cumulative_bound", r.cumulative_bound},
                      {"improvement_vs_baseline", r.improvement_vs_baseline},
                      {"divergent", r.divergent}};
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_table_csv(std::ostream& os, const TwiddleTable& table) {
  os << "k,theta,omega_r,omega_i,path,multiplier,ratio,clamped\n";
  for (std::size_t k = 0; k < table.entries.size(); ++k) {
    const TwiddleEntry& e = table.entries[k];
    os << k << ',' << format_double(twiddle_angle(k, table.n)) << ','
       << format_double(e.omega_r) << ',' << format_double(e.omega_i) << ','
       << to_string(e.path) << ',' << format_double(e.multiplier) << ','
       << format_double(e.ratio) << ',' << bool_name(e.clamped) << '\n';
  }
}

void write_table_json(std::ostream& os, const TwiddleTable& table) {
  ordered_json entries = ordered_json::array();
  for (std::size_t k = 0; k < table.entries.size(); ++k) {
    const TwiddleEntry& e = table.entries[k];
    entries.push_back(ordered_json{{"k", k},
                                   {"theta", twiddle_angle(k, table.n)},
                                   {"omega_r", e.omega_r},
                                   {"omega_i", e.omega_i},
                                   {"path", to_string(e.path)},
                                   {"multiplier", e.multiplier},
                                   {"ratio", e.ratio},
                                   {"clamped", e.clamped}});
  }
  os << ordered_json{{"n", table.n},
                     {"strategy", to_string(table.strategy)},
                     {"entries", std::move(entries)}}
            .dump(2)
     << '\n';
}

void write_bounds_csv(std::ostream& os, const std::vector<BoundReport>& rows) {
  os << "strategy,t_max,argmax_k,singular_count,cos_path_count,sin_path_count,"
        "per_butterfly_bound,cumulative_bound,improvement_vs_baseline,"
        "divergent\n";
  for (const BoundReport& r : rows) {
    os << to_string(r.strategy) << ',' << format_double(r.t_max) << ','
       << r.argmax_k << ',' << r.singular_count << ',' << r.cos_path_count
       << ',' << r.sin_path_count << ',' << format_double(r.per_butterfly_bound)
       << ',' << format_double(r.cumulative_bound) << ','
       << format_double(r.improvement_vs_baseline) << ','
       << bool_name(r.divergent) << '\n';
  }
}

void write_bounds_json(std::ostream& os, const std::vector<BoundReport>& rows) {
  ordered_json arr = ordered_json::array();
  for (const BoundReport& r : rows) arr.push_back(bound_row_json(r));
  os << arr.dump(2) << '\n';
}

void write_bounds_human(std::ostream& os, const std::vector<BoundReport>& rows) {
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %12s %6s %9s %11s %14s %12s\n",
                "strategy", "t_max", "sing.", "paths C/S", "per-bfly",
                "cumulative", "improvement");
  os << line;
  for (const BoundReport& r : rows) {
    char paths[24];
    std::snprintf(paths, sizeof paths, "%zu/%zu", r.cos_path_count,
                  r.sin_path_count);
    char perb[32];
    if (r.divergent)
      std::snprintf(perb, sizeof perb, "divergent");
    else
      std::snprintf(perb, sizeof perb, "%.3e", r.per_butterfly_bound);
    char cumul[32];
    if (r.divergent)
      std::snprintf(cumul, sizeof cumul, "divergent");
    else
      std::snprintf(cumul, sizeof cumul, "%.3e", r.cumulative_bound);
    char improv[32];
    if (r.improvement_vs_baseline == 1.0 || r.divergent ||
        std::isnan(r.improvement_vs_baseline))
      std::snprintf(improv, sizeof improv, "--");
    else
      std::snprintf(improv, sizeof improv, "%.1fx", r.improvement_vs_baseline);
    std::snprintf(line, sizeof line, "%-12s %12.6g %6zu %9s %11s %14s %12s\n",
                  pretty_strategy(r.strategy).c_str(), r.t_max,
                  r.singular_count, paths, perb, cumul, improv);
    os << line;
  }
}

void write_error_csv(std::ostream& os, const ErrorReport& r) {
  os << "n,strategy,precision,metric,trials,seed,rel_l2_median,rel_l2_max,"
        "nonfinite_trials\n";
  os << r.n << ',' << to_string(r.strategy) << ',' << to_string(r.precision)
     << ',' << to_string(r.metric) << ',' << r.trials << ',' << r.seed << ','
     << format_double(r.rel_l2_median) << ',' << format_double(r.rel_l2_max)
     << ',' << r.nonfinite_trials << '\n';
}

void write_error_json(std::ostream& os, const ErrorReport& r) {
  os << ordered_json{{"n", r.n},
                     {"strategy", to_string(r.strategy)},
                     {"precision", to_string(r.precision)},
                     {"metric", to_string(r.metric)},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"rel_l2_median", r.rel_l2_median},
                     {"rel_l2_max", r.rel_l2_max},
                     {"nonfinite_trials", r.nonfinite_trials}}
            .dump(2)
     << '\n';
}

void write_error_human(std::ostream& os, const ErrorReport& r) {
  os << "n=" << r.n << " strategy=" << to_string(r.strategy)
     << " precision=" << to_string(r.precision)
     << " metric=" << to_string(r.metric) << " trials=" << r.trials
     << " seed=" << r.seed << '\n';
  char line[120];
  std::snprintf(line, sizeof line,
                "rel_l2 median=%.6e max=%.6e nonfinite=%zu\n", r.rel_l2_median,
                r.rel_l2_max, r.nonfinite_trials);
  os << line;
}

}  // namespace fmafft
