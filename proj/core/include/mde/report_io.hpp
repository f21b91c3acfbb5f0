#pragma once

#include <string>

#include "mde/monte_carlo.hpp"

namespace mde {

/// Header: experiment,distribution,estimator,parameter,bias,se,mse,reps_used
/// Numbers use the shortest representation that round-trips.
std::string report_to_csv(const McReport& report);

/// {"metadata": {...config echo, seed, elapsed_seconds...}, "rows": [...]}
/// with the CSV fields per row.
std::string report_to_json(const McReport& report);

}  // namespace mde
