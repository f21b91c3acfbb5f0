#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mde/ar_mde.hpp"
#include "mde/lr_mde.hpp"
#include "mde/two_stage.hpp"

namespace mde::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitEstimationFailed = 1,  // estimator or campaign error
  kExitBadInput = 2,          // usage, flag or input-file error
};

/// Entry point of the `mde` tool; args exclude the program name.
/// Documents go to --output when given, otherwise to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const OptimizerDiagnostics& diag);
nlohmann::json to_json(const LrEstimate& est, const IntegratingMeasure& m);
nlohmann::json to_json(const ArEstimate& est, int order, const IntegratingMeasure& m);
nlohmann::json to_json(const TwoStageResult& res, int order, const IntegratingMeasure& reg_m,
                       const IntegratingMeasure& ar_m);

/// Long-format CSV (field,index,value) of an estimate document.
std::string estimate_to_csv(const nlohmann::json& doc);

}  // namespace mde::cli
