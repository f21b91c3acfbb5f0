#include "mde/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <thread>

#include <fmt/format.h>

#include "mde/baselines.hpp"
#include "mde/error.hpp"
#include "mde/generators.hpp"
#include "mde/two_stage.hpp"

namespace mde {

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::LR:
      return "lr";
    case Experiment::AR:
      return "ar";
    case Experiment::TwoStage:
      return "2stage";
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  if (name == "lr") return Experiment::LR;
  if (name == "ar") return Experiment::AR;
  if (name == "2stage") return Experiment::TwoStage;
  throw Error(ErrorKind::InvalidArgument,
              "unknown experiment '" + std::string(name) + "' (expected lr, ar or 2stage)");
}

std::string EstimatorSpec::label() const {
  switch (kind) {
    case EstimatorKind::Ols:
      return "OLS";
    case EstimatorKind::KoulLr:
      return "MD-" + measure.name();
    case EstimatorKind::ArCls:
      return "CLS";
    case EstimatorKind::KoulAr:
      return "MD-" + measure.name();
    case EstimatorKind::CochraneOrcutt:
      return "CO";
    case EstimatorKind::Koul2Stage:
      return measure.name() == ar_measure.name() ? "MD2stage-" + measure.name()
                                                 : "MD2stage-" + measure.name() + "-" +
                                                       ar_measure.name();
  }
  return "unknown";
}

void McConfig::validate() const {
  if (replications < 2) {
    throw Error(ErrorKind::InvalidArgument, "a campaign needs at least 2 replications");
  }
  if (workers < 1) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
  distribution.validate();
  const bool needs_beta = experiment != Experiment::AR;
  const bool needs_rho = experiment != Experiment::LR;
  if (needs_beta && (beta.size() < 1 || n < beta.size())) {
    throw Error(ErrorKind::Shape, fmt::format("need n >= p >= 1, got n={} p={}", n, beta.size()));
  }
  if (needs_rho && (rho.size() < 1 || n <= rho.size())) {
    throw Error(ErrorKind::Order, fmt::format("need n > q >= 1, got n={} q={}", n, rho.size()));
  }
  if (!needs_beta && beta.size() != 0) {
    throw Error(ErrorKind::InvalidArgument, "AR experiment takes no beta");
  }
  if (!needs_rho && rho.size() != 0) {
    throw Error(ErrorKind::InvalidArgument, "LR experiment takes no rho");
  }
}

Vector McConfig::truth() const {
  Vector t(beta.size() + rho.size());
  t << beta, rho;
  return t;
}

std::vector<std::string> McConfig::parameter_names() const {
  std::vector<std::string> names;
  for (Eigen::Index k = 0; k < beta.size(); ++k) names.push_back(fmt::format("beta{}", k + 1));
  for (Eigen::Index k = 0; k < rho.size(); ++k) names.push_back(fmt::format("rho{}", k + 1));
  return names;
}

McConfig default_config(Experiment e) {
  McConfig cfg;
  cfg.experiment = e;
  const auto leb = IntegratingMeasure::lebesgue();
  switch (e) {
    case Experiment::LR:
      cfg.n = 50;
      cfg.beta = Vector{{-2.0, 0.3, 1.5}};
      cfg.estimators = {{EstimatorKind::Ols}, {EstimatorKind::KoulLr, leb}};
      break;
    case Experiment::AR:
      cfg.n = 100;
      cfg.rho = Vector{{-0.2, 0.8, 0.4, -0.7}};
      cfg.estimators = {{EstimatorKind::ArCls},
                        {EstimatorKind::KoulAr, leb},
                        {EstimatorKind::KoulAr, IntegratingMeasure::degenerate()}};
      break;
    case Experiment::TwoStage:
      cfg.n = 50;
      cfg.beta = Vector{{-2.0, 0.3, 1.5, -4.3}};
      cfg.rho = Vector{{0.4}};
      cfg.estimators = {{EstimatorKind::CochraneOrcutt}, {EstimatorKind::Koul2Stage, leb, leb}};
      break;
  }
  return cfg;
}

McSample generate_sample(const McConfig& cfg, RandomStream& stream) {
  McSample s;
  switch (cfg.experiment) {
    case Experiment::LR:
      s.regression = gen_lr(cfg.n, cfg.beta, cfg.distribution, stream);
      break;
    case Experiment::AR:
      s.series = gen_ar(cfg.n, cfg.rho, cfg.distribution, stream);
      break;
    case Experiment::TwoStage:
      s.regression = gen_lr_ar(cfg.n, cfg.beta, cfg.rho, cfg.distribution, stream);
      break;
  }
  return s;
}

NamedEstimator make_estimator(const EstimatorSpec& spec, const McConfig& cfg) {
  const bool lr_kind = spec.kind == EstimatorKind::Ols || spec.kind == EstimatorKind::KoulLr;
  const bool ar_kind = spec.kind == EstimatorKind::ArCls || spec.kind == EstimatorKind::KoulAr;
  const bool ts_kind = !lr_kind && !ar_kind;
  if ((cfg.experiment == Experiment::LR && !lr_kind) ||
      (cfg.experiment == Experiment::AR && !ar_kind) ||
      (cfg.experiment == Experiment::TwoStage && !ts_kind)) {
    throw Error(ErrorKind::InvalidArgument, "estimator " + spec.label() +
                                                " does not apply to the " +
                                                std::string(to_string(cfg.experiment)) +
                                                " experiment");
  }

  const OptimizerOptions opts = cfg.optimizer;
  const int q = static_cast<int>(cfg.rho.size());
  NamedEstimator out{spec.label(), {}};
  switch (spec.kind) {
    case EstimatorKind::Ols:
      out.fn = [](const McSample& s) { return ols(s.regression).betahat; };
      break;
    case EstimatorKind::KoulLr:
      out.fn = [m = spec.measure, opts](const McSample& s) {
        return koul_lr_mde(s.regression, WeightMatrix::default_weights(), m, opts).betahat;
      };
      break;
    case EstimatorKind::ArCls:
      out.fn = [](const McSample& s) { return ar_cls(s.series); };
      break;
    case EstimatorKind::KoulAr:
      out.fn = [m = spec.measure, opts](const McSample& s) {
        return koul_ar_mde(s.series, m, opts).rhohat;
      };
      break;
    case EstimatorKind::CochraneOrcutt:
      out.fn = [q](const McSample& s) {
        const CoResult co = cochrane_orcutt(s.regression, q);
        Vector v(co.betahat.size() + co.rhohat.size());
        v << co.betahat, co.rhohat;
        return v;
      };
      break;
    case EstimatorKind::Koul2Stage:
      out.fn = [m = spec.measure, am = spec.ar_measure, q, opts](const McSample& s) {
        const TwoStageResult r =
            koul_2stage_mde(s.regression, WeightMatrix::default_weights(), m, q, am, opts);
        Vector v(r.stage2.betahat.size() + r.stage2.rhohat.size());
        v << r.stage2.betahat, r.stage2.rhohat;
        return v;
      };
      break;
  }
  return out;
}

McReport run_campaign(const McConfig& cfg, const std::vector<NamedEstimator>& estimators) {
  cfg.validate();
  if (estimators.empty()) throw Error(ErrorKind::InvalidArgument, "no estimators to run");
  const auto start = std::chrono::steady_clock::now();

  const Vector truth = cfg.truth();
  const auto reps = static_cast<std::size_t>(cfg.replications);
  const std::size_t n_est = estimators.size();
  // estimates[r * n_est + e]; empty when the estimator failed on replication r
  std::vector<std::optional<Vector>> estimates(reps * n_est);

  auto run_one = [&](std::size_t r) {
    RandomStream stream(cfg.seed, r);
    const McSample sample = generate_sample(cfg, stream);
    for (std::size_t e = 0; e < n_est; ++e) {
      try {
        Vector v = estimators[e].fn(sample);
        if (v.size() == truth.size() && v.allFinite()) estimates[r * n_est + e] = std::move(v);
      } catch (const Error&) {
        // counted as a failure below
      }
    }
  };

  const auto workers = static_cast<std::size_t>(std::max(1, cfg.workers));
  if (workers == 1) {
    for (std::size_t r = 0; r < reps; ++r) run_one(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < reps; r = next++) run_one(r);
      });
    }
  }

  McReport report;
  report.config = cfg;
  const auto names = cfg.parameter_names();
  for (std::size_t e = 0; e < n_est; ++e) {
    // Work with deviations from the truth so an exact estimator gives exact zeros.
    int used = 0;
    Vector dev_sum = Vector::Zero(truth.size());
    for (std::size_t r = 0; r < reps; ++r) {
      if (const auto& v = estimates[r * n_est + e]) {
        dev_sum += *v - truth;
        ++used;
      }
    }
    if (used < 2) {
      throw Error(ErrorKind::Campaign,
                  fmt::format("estimator {} succeeded on {} of {} replications", estimators[e].name,
                              used, reps));
    }
    const Vector bias = dev_sum / used;
    Vector centered_sq = Vector::Zero(truth.size());
    Vector dev_sq = Vector::Zero(truth.size());
    for (std::size_t r = 0; r < reps; ++r) {
      if (const auto& v = estimates[r * n_est + e]) {
        const Vector dev = *v - truth;
        centered_sq += (dev - bias).cwiseAbs2();
        dev_sq += dev.cwiseAbs2();
      }
    }
    for (Eigen::Index k = 0; k < truth.size(); ++k) {
      McRow row;
      row.estimator = estimators[e].name;
      row.parameter = names[k];
      row.parameter_index = static_cast<int>(k);
      row.truth = truth(k);
      row.bias = bias(k);
      row.se = std::sqrt(centered_sq(k) / (used - 1));
      row.mse = dev_sq(k) / used;
      row.reps_used = used;
      row.failures = static_cast<int>(reps) - used;
      report.rows.push_back(std::move(row));
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

McReport monte_carlo(const McConfig& cfg) {
  cfg.validate();
  std::vector<NamedEstimator> ests;
  ests.reserve(cfg.estimators.size());
  for (const auto& spec : cfg.estimators) ests.push_back(make_estimator(spec, cfg));
  return run_campaign(cfg, ests);
}

}  // namespace mde
