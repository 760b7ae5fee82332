#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fmafft/analysis.hpp"
#include "fmafft/twiddle.hpp"

namespace fmafft {

// %.17g: shortest fixed formatting that round-trips every double.
std::string format_double(double v);

// CSV schema: k,theta,omega_r,omega_i,path,multiplier,ratio,clamped
void write_table_csv(std::ostream& os, const TwiddleTable& table);
// JSON: {"n":..,"strategy":..,"entries":[{"k":..,"theta":..,...},...]}
void write_table_json(std::ostream& os, const TwiddleTable& table);

// CSV schema: strategy,t_max,argmax_k,singular_count,cos_path_count,
//             sin_path_count,per_butterfly_bound,cumulative_bound,
//             improvement_vs_baseline,divergent
void write_bounds_csv(std::ostream& os, const std::vector<BoundReport>& rows);
// JSON: array of objects keyed by the same field names.
void write_bounds_json(std::ostream& os, const std::vector<BoundReport>& rows);
void write_bounds_human(std::ostream& os, const std::vector<BoundReport>& rows);

// CSV schema: n,strategy,precision,metric,trials,seed,rel_l2_median,
//             rel_l2_max,nonfinite_trials
void write_error_csv(std::ostream& os, const ErrorReport& report);
// JSON object keyed by the field names above (non-finite values emit null).
void write_error_json(std::ostream& os, const ErrorReport& report);
void write_error_human(std::ostream& os, const ErrorReport& report);

}  // namespace fmafft
