#include "mde/report_io.hpp"

#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace mde {

namespace {

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

std::string report_to_csv(const McReport& report) {
  const auto& cfg = report.config;
  std::string out = "experiment,distribution,estimator,parameter,bias,se,mse,reps_used\n";
  for (const auto& row : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", to_string(cfg.experiment),
                       to_string(cfg.distribution.family), row.estimator, row.parameter, row.bias,
                       row.se, row.mse, row.reps_used);
  }
  return out;
}

std::string report_to_json(const McReport& report) {
  using nlohmann::json;
  const auto& cfg = report.config;

  json estimators = json::array();
  for (const auto& e : cfg.estimators) estimators.push_back(e.label());

  json meta = {
      {"experiment", to_string(cfg.experiment)},
      {"distribution", to_string(cfg.distribution.family)},
      {"location", cfg.distribution.location},
      {"scale", cfg.distribution.scale},
      {"n", cfg.n},
      {"beta", to_std(cfg.beta)},
      {"rho", to_std(cfg.rho)},
      {"replications", cfg.replications},
      {"seed", cfg.seed},
      {"workers", cfg.workers},
      {"estimators", estimators},
      {"elapsed_seconds", report.elapsed_seconds},
  };

  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({
        {"experiment", to_string(cfg.experiment)},
        {"distribution", to_string(cfg.distribution.family)},
        {"estimator", row.estimator},
        {"parameter", row.parameter},
        {"truth", row.truth},
        {"bias", row.bias},
        {"se", row.se},
        {"mse", row.mse},
        {"reps_used", row.reps_used},
        {"failures", row.failures},
    });
  }
  return json{{"metadata", meta}, {"rows", rows}}.dump(2) + "\n";
}

}  // namespace mde
