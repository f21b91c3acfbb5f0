#include <benchmark/benchmark.h>

#include "mde/mde.hpp"

namespace {

using namespace mde;

const ErrorDistribution kNormal{DistributionFamily::Normal, 0.0, 5.0};

RegressionData lr_data(Eigen::Index n, Eigen::Index p, std::uint64_t seed = 1) {
  RandomStream s(seed);
  return gen_lr(n, Vector::LinSpaced(p, -2.0, 1.5), kNormal, s);
}

void BM_ObjectiveContinuous(benchmark::State& state) {
  const RegressionData data = lr_data(state.range(0), 3);
  const DistanceObjective obj(data, default_weights(data.x), IntegratingMeasure::lebesgue());
  const Vector b = solve_ls(data.x, data.y);
  for (auto _ : state) benchmark::DoNotOptimize(obj(b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ObjectiveContinuous)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ObjectiveDegenerate(benchmark::State& state) {
  const RegressionData data = lr_data(state.range(0), 3);
  const DistanceObjective obj(data, default_weights(data.x), IntegratingMeasure::degenerate());
  const Vector b = solve_ls(data.x, data.y);
  for (auto _ : state) benchmark::DoNotOptimize(obj(b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ObjectiveDegenerate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_PrimalObjectiveExact(benchmark::State& state) {
  const RegressionData data = lr_data(state.range(0), 3);
  const Matrix d = default_weights(data.x);
  const Vector b = solve_ls(data.x, data.y);
  for (auto _ : state)
    benchmark::DoNotOptimize(primal_objective_exact(b, data, d, IntegratingMeasure::lebesgue()));
}
BENCHMARK(BM_PrimalObjectiveExact)->Arg(16)->Arg(64)->Arg(256);

void BM_KoulLrMde(benchmark::State& state) {
  const RegressionData data = lr_data(50, 3);
  const IntegratingMeasure m =
      state.range(0) ? IntegratingMeasure::degenerate() : IntegratingMeasure::lebesgue();
  for (auto _ : state)
    benchmark::DoNotOptimize(koul_lr_mde(data, WeightMatrix::default_weights(), m));
  state.SetLabel(m.name());
}
BENCHMARK(BM_KoulLrMde)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KoulArMde(benchmark::State& state) {
  RandomStream s(2);
  const ARData data = gen_ar(100, Vector{{-0.2, 0.8, 0.4, -0.7}}, kNormal, s);
  const IntegratingMeasure m =
      state.range(0) ? IntegratingMeasure::degenerate() : IntegratingMeasure::lebesgue();
  for (auto _ : state) benchmark::DoNotOptimize(koul_ar_mde(data, m));
  state.SetLabel(m.name());
}
BENCHMARK(BM_KoulArMde)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Koul2StageMde(benchmark::State& state) {
  RandomStream s(3);
  const RegressionData data =
      gen_lr_ar(50, Vector{{-2.0, 0.3, 1.5, -4.3}}, Vector{{0.4}}, kNormal, s);
  const auto leb = IntegratingMeasure::lebesgue();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        koul_2stage_mde(data, WeightMatrix::default_weights(), leb, 1, leb));
}
BENCHMARK(BM_Koul2StageMde)->Unit(benchmark::kMillisecond);

void BM_CochraneOrcutt(benchmark::State& state) {
  RandomStream s(3);
  const RegressionData data =
      gen_lr_ar(50, Vector{{-2.0, 0.3, 1.5, -4.3}}, Vector{{0.4}}, kNormal, s);
  for (auto _ : state) benchmark::DoNotOptimize(cochrane_orcutt(data, 1));
}
BENCHMARK(BM_CochraneOrcutt);

void BM_InvSqrtSym(benchmark::State& state) {
  const RegressionData data = lr_data(200, state.range(0));
  const Matrix g = data.x.transpose() * data.x;
  for (auto _ : state) benchmark::DoNotOptimize(inv_sqrt_sym(g));
}
BENCHMARK(BM_InvSqrtSym)->Arg(3)->Arg(10)->Arg(30);

void BM_Campaign(benchmark::State& state) {
  McConfig cfg = default_config(static_cast<Experiment>(state.range(0)));
  cfg.replications = 20;
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo(cfg));
  state.SetLabel(std::string(to_string(cfg.experiment)));
  state.SetItemsProcessed(state.iterations() * cfg.replications);
}
BENCHMARK(BM_Campaign)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
