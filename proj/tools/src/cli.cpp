#include "mde_cli/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mde/error.hpp"
#include "mde/monte_carlo.hpp"
#include "mde/report_io.hpp"
#include "mde_cli/csv_table.hpp"

namespace mde::cli {

namespace {

using nlohmann::json;

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

struct EstimateArgs {
  std::string kind;
  std::string input;
  bool header = false;
  std::string measure = "lebesgue";
  std::string reg_measure = "lebesgue";
  std::string ar_measure = "lebesgue";
  std::optional<int> order;
  std::string output;
  std::string format = "json";
};

struct BenchArgs {
  std::string kind;
  std::optional<int> n;
  int reps = 1000;
  std::string dist = "normal";
  double scale = 5.0;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "csv";
  int workers = 1;
  std::string measure = "lebesgue";
  std::string reg_measure = "lebesgue";
  std::string ar_measure = "lebesgue";
};

// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + output + "'");
  file << text;
  if (!file) throw UsageError("failed writing output file '" + output + "'");
}

Matrix load_table(const EstimateArgs& a) {
  std::ifstream in(a.input);
  if (!in) throw UsageError("cannot open input file '" + a.input + "'");
  return read_numeric_csv(in, a.header);
}

int require_order(const std::optional<int>& order) {
  if (!order) throw UsageError("--order is required for this estimator");
  if (*order < 1) throw UsageError("--order must be >= 1");
  return *order;
}

json run_estimate(const EstimateArgs& a) {
  const Matrix table = load_table(a);
  if (a.kind == "ar") {
    if (table.cols() != 1) {
      throw UsageError(fmt::format("ar input must have a single column, got {}", table.cols()));
    }
    const int q = require_order(a.order);
    const IntegratingMeasure m = parse_measure(a.measure);
    const ArEstimate est = koul_ar_mde(ARData{table.col(0), q}, m);
    return to_json(est, q, m);
  }

  if (table.cols() < 2) {
    throw UsageError(fmt::format("{} input needs a response column and at least one covariate",
                                 a.kind));
  }
  const RegressionData data{table.col(0), table.rightCols(table.cols() - 1)};
  if (a.kind == "lr") {
    const IntegratingMeasure m = parse_measure(a.measure);
    return to_json(koul_lr_mde(data, WeightMatrix::default_weights(), m), m);
  }
  const int q = require_order(a.order);
  const IntegratingMeasure reg_m = parse_measure(a.reg_measure);
  const IntegratingMeasure ar_m = parse_measure(a.ar_measure);
  return to_json(koul_2stage_mde(data, WeightMatrix::default_weights(), reg_m, q, ar_m), q,
                 reg_m, ar_m);
}

McConfig bench_config(const BenchArgs& a) {
  McConfig cfg = default_config(parse_experiment(a.kind));
  if (a.n) cfg.n = *a.n;
  cfg.replications = a.reps;
  cfg.seed = a.seed;
  cfg.workers = a.workers;
  cfg.distribution.family = parse_family(a.dist);
  cfg.distribution.scale = a.scale;
  for (auto& spec : cfg.estimators) {
    if (spec.kind == EstimatorKind::KoulLr) spec.measure = parse_measure(a.measure);
    if (spec.kind == EstimatorKind::Koul2Stage) {
      spec.measure = parse_measure(a.reg_measure);
      spec.ar_measure = parse_measure(a.ar_measure);
    }
  }
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

}  // namespace

json to_json(const OptimizerDiagnostics& diag) {
  return {{"iterations", diag.iterations},
          {"evaluations", diag.evaluations},
          {"converged", diag.converged},
          {"final_spread", diag.final_spread}};
}

json to_json(const LrEstimate& est, const IntegratingMeasure& m) {
  return {{"kind", "lr"},
          {"measure", m.name()},
          {"betahat", to_std(est.betahat)},
          {"residuals", to_std(est.residuals)},
          {"objective", est.objective_at_min},
          {"diagnostics", to_json(est.optimizer_diag)}};
}

json to_json(const ArEstimate& est, int order, const IntegratingMeasure& m) {
  return {{"kind", "ar"},
          {"order", order},
          {"measure", m.name()},
          {"rhohat", to_std(est.rhohat)},
          {"residuals", to_std(est.residuals)},
          {"objective", est.objective_at_min},
          {"diagnostics", to_json(est.optimizer_diag)}};
}

json to_json(const TwoStageResult& res, int order, const IntegratingMeasure& reg_m,
             const IntegratingMeasure& ar_m) {
  auto stage = [](const StageEstimates& s) {
    return json{{"betahat", to_std(s.betahat)},
                {"residuals", to_std(s.residuals)},
                {"rhohat", to_std(s.rhohat)},
                {"rho_degenerate", s.rho_degenerate},
                {"regression_diagnostics", to_json(s.lr_diag)},
                {"ar_diagnostics", to_json(s.ar_diag)}};
  };
  return {{"kind", "2stage"},
          {"order", order},
          {"reg_measure", reg_m.name()},
          {"ar_measure", ar_m.name()},
          {"stage1", stage(res.stage1)},
          {"stage2", stage(res.stage2)}};
}

std::string estimate_to_csv(const json& doc) {
  std::string out = "field,index,value\n";
  auto add_vector = [&](const std::string& prefix, const json& arr) {
    for (std::size_t i = 0; i < arr.size(); ++i)
      out += fmt::format("{},{},{}\n", prefix, i + 1, arr[i].get<double>());
  };
  auto add_block = [&](const std::string& prefix, const json& block) {
    for (const char* key : {"betahat", "rhohat", "residuals"}) {
      if (block.contains(key)) add_vector(prefix + key, block[key]);
    }
    if (block.contains("objective"))
      out += fmt::format("{}objective,1,{}\n", prefix, block["objective"].get<double>());
  };
  if (doc.contains("stage1")) {
    add_block("stage1.", doc["stage1"]);
    add_block("stage2.", doc["stage2"]);
  } else {
    add_block("", doc);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum distance estimation for linear regression and autoregression", "mde"};
  app.require_subcommand(1);

  const std::vector<std::string> measures{"lebesgue", "degenerate"};
  const std::vector<std::string> kinds{"lr", "ar", "2stage"};

  EstimateArgs ea;
  auto* est = app.add_subcommand("estimate", "Fit an estimator to data read from CSV");
  est->add_option("kind", ea.kind, "lr, ar or 2stage")->required()->check(CLI::IsMember(kinds));
  est->add_option("--input", ea.input,
                  "CSV file: lr/2stage = response then covariates, ar = one column")
      ->required();
  est->add_flag("--header", ea.header, "Skip the first line of the input");
  est->add_option("--measure", ea.measure, "Integrating measure for lr/ar")
      ->check(CLI::IsMember(measures));
  est->add_option("--reg-measure", ea.reg_measure, "Regression measure for 2stage")
      ->check(CLI::IsMember(measures));
  est->add_option("--ar-measure", ea.ar_measure, "Autoregression measure for 2stage")
      ->check(CLI::IsMember(measures));
  est->add_option("--order", ea.order, "Autoregressive order q (ar, 2stage)");
  est->add_option("--output", ea.output, "Write the document here instead of stdout");
  est->add_option("--format", ea.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run a seeded Monte Carlo comparison");
  bench->add_option("kind", ba.kind, "lr, ar or 2stage")->required()->check(CLI::IsMember(kinds));
  bench->add_option("--n", ba.n, "Sample size (default: 50 lr, 100 ar, 50 2stage)");
  bench->add_option("--reps", ba.reps, "Replications")->check(CLI::Range(2, 100000000));
  bench->add_option("--dist", ba.dist, "Error/innovation law")
      ->check(CLI::IsMember({"normal", "laplace", "logistic"}));
  bench->add_option("--scale", ba.scale, "Scale of the error law")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", ba.seed, "Campaign seed");
  bench->add_option("--workers", ba.workers, "Threads (results do not depend on it)")
      ->check(CLI::Range(1, 1024));
  bench->add_option("--measure", ba.measure, "Measure of the MD estimator (lr)")
      ->check(CLI::IsMember(measures));
  bench->add_option("--reg-measure", ba.reg_measure, "Regression measure (2stage)")
      ->check(CLI::IsMember(measures));
  bench->add_option("--ar-measure", ba.ar_measure, "Autoregression measure (2stage)")
      ->check(CLI::IsMember(measures));
  bench->add_option("--format", ba.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--output", ba.output, "Write the report here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mde: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (*est) {
      const json doc = run_estimate(ea);
      emit(ea.format == "json" ? doc.dump(2) + "\n" : estimate_to_csv(doc), ea.output, out);
    } else {
      const McReport report = monte_carlo(bench_config(ba));
      emit(ba.format == "csv" ? report_to_csv(report) : report_to_json(report), ba.output, out);
    }
  } catch (const CsvError& e) {
    err << "mde: " << ea.input << ": " << e.what() << "\n";
    return kExitBadInput;
  } catch (const UsageError& e) {
    err << "mde: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    err << "mde: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kExitBadInput : kExitEstimationFailed;
  }
  return kExitOk;
}

}  // namespace mde::cli
