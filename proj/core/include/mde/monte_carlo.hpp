#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mde/ar_mde.hpp"
#include "mde/distributions.hpp"
#include "mde/lr_mde.hpp"
#include "mde/measures.hpp"
#include "mde/nelder_mead.hpp"

namespace mde {

enum class Experiment { LR, AR, TwoStage };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

enum class EstimatorKind {
  Ols,             // LR
  KoulLr,          // LR, measure
  ArCls,           // AR
  KoulAr,          // AR, measure
  CochraneOrcutt,  // TwoStage
  Koul2Stage,      // TwoStage, measure (regression) + ar_measure
};

struct EstimatorSpec {
  EstimatorKind kind;
  IntegratingMeasure measure = IntegratingMeasure::lebesgue();
  IntegratingMeasure ar_measure = IntegratingMeasure::lebesgue();

  /// Report label, e.g. "OLS", "MD-lebesgue", "CO", "MD2stage-lebesgue".
  std::string label() const;
};

struct McConfig {
  Experiment experiment = Experiment::LR;
  Eigen::Index n = 50;
  Vector beta;  // LR and TwoStage
  Vector rho;   // AR and TwoStage
  ErrorDistribution distribution;
  int replications = 1000;
  std::uint64_t seed = 1;
  std::vector<EstimatorSpec> estimators;
  OptimizerOptions optimizer;
  /// Threads used to run replications; results do not depend on it.
  int workers = 1;

  void validate() const;
  /// beta followed by rho, in the order of report rows.
  Vector truth() const;
  std::vector<std::string> parameter_names() const;
};

/// Reference setups for the three experiments, with their
/// default estimator lists:
///   LR        n=50,  beta=(-2, 0.3, 1.5)                      OLS vs MD
///   AR        n=100, rho=(-0.2, 0.8, 0.4, -0.7)               CLS vs MD (both measures)
///   TwoStage  n=50,  beta=(-2, 0.3, 1.5, -4.3), rho=(0.4)      CO vs two-stage MD
McConfig default_config(Experiment e);

/// One simulated data set. `regression` is filled for LR/TwoStage, `series`
/// for AR.
struct McSample {
  RegressionData regression;
  ARData series;
};

McSample generate_sample(const McConfig& cfg, RandomStream& stream);

using EstimatorFn = std::function<Vector(const McSample&)>;

struct NamedEstimator {
  std::string name;
  EstimatorFn fn;
};

NamedEstimator make_estimator(const EstimatorSpec& spec, const McConfig& cfg);

struct McRow {
  std::string estimator;
  std::string parameter;
  int parameter_index = 0;  // 0-based position in truth()
  double truth = 0.0;
  double bias = 0.0;
  double se = 0.0;
  double mse = 0.0;
  int reps_used = 0;
  int failures = 0;
};

struct McReport {
  McConfig config;
  double elapsed_seconds = 0.0;
  std::vector<McRow> rows;
};

/// Runs cfg.replications replications of the given estimators. Replication r
/// draws from RandomStream(cfg.seed, r); aggregation is in replication order.
/// For each estimator and parameter: bias = mean - truth, se = sample sd
/// (denominator R - 1), mse = mean squared deviation from truth, over the R
/// replications where that estimator succeeded. Throws Error(Campaign) if an
/// estimator succeeded fewer than two times.
McReport run_campaign(const McConfig& cfg, const std::vector<NamedEstimator>& estimators);

/// run_campaign with the estimators listed in cfg.estimators.
McReport monte_carlo(const McConfig& cfg);

}  // namespace mde
