#include <gtest/gtest.h>

#include "mde/ar_mde.hpp"
#include "mde/error.hpp"
#include "mde/generators.hpp"
#include "mde/two_stage.hpp"
#include "test_support.hpp"

namespace mde {
namespace {

using test::max_abs;

const IntegratingMeasure kLeb = IntegratingMeasure::lebesgue();
const IntegratingMeasure kDeg = IntegratingMeasure::degenerate();

RegressionData reference_setup(std::uint64_t seed, double rho, DistributionFamily family) {
  RandomStream stream(seed);
  return gen_lr_ar(50, Vector{{-2.0, 0.3, 1.5, -4.3}}, Vector{{rho}}, {family, 0.0, 5.0}, stream);
}

TEST(TransformData, OrderOne) {
  const TransformedData t = transform_data(Vector{{1.0, 2.0, 3.0}}, Matrix{{1.0}, {1.0}, {2.0}},
                                           Vector{{0.4}});
  ASSERT_EQ(t.y.size(), 2);
  EXPECT_DOUBLE_EQ(t.y(0), 1.6);
  EXPECT_DOUBLE_EQ(t.y(1), 2.2);
  EXPECT_DOUBLE_EQ(t.x(0, 0), 0.6);
  EXPECT_DOUBLE_EQ(t.x(1, 0), 1.6);
}

TEST(TransformData, OrderTwo) {
  const TransformedData t =
      transform_data(Vector{{2.0, 4.0, 6.0}}, Matrix::Ones(3, 1), Vector{{0.5, -0.5}});
  ASSERT_EQ(t.y.size(), 1);
  EXPECT_DOUBLE_EQ(t.y(0), 5.0);
  EXPECT_DOUBLE_EQ(t.x(0, 0), 1.0);
}

TEST(TransformData, ZeroRhoDropsRowsBitwise) {
  test::Rng rng(1);
  for (int q = 1; q <= 3; ++q) {
    const Vector y = rng.vector(10, -1e3, 1e3);
    const Matrix x = rng.matrix(10, 2, -1e3, 1e3);
    const TransformedData t = transform_data(y, x, Vector::Zero(q));
    EXPECT_EQ(t.y, y.tail(10 - q));
    EXPECT_EQ(t.x, x.bottomRows(10 - q));
  }
}

TEST(TransformData, Errors) {
  try {
    transform_data(Vector::Ones(2), Matrix::Ones(2, 1), Vector::Zero(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Order);
  }
  EXPECT_THROW(transform_data(Vector::Ones(3), Matrix::Ones(4, 1), Vector::Zero(1)), Error);
}

TEST(IsIdenticallyZero, Basic) {
  EXPECT_TRUE(is_identically_zero(Vector::Zero(4)));
  Vector v = Vector::Zero(4);
  v(3) = 1e-300;
  EXPECT_FALSE(is_identically_zero(v));
}

TEST(Koul2StageMde, NoiseFreeRecoversBetaAndFlagsRho) {
  test::Rng rng(2);
  const Matrix x = rng.matrix(40, 3, 0.0, 50.0);
  const Vector beta{{-2.0, 0.3, 1.5}};
  for (const auto* m : {&kLeb, &kDeg}) {
    const TwoStageResult r = koul_2stage_mde({x * beta, x}, WeightMatrix::default_weights(), *m, 1,
                                             *m);
    EXPECT_LT(max_abs(r.stage1.betahat - beta), 1e-6);
    EXPECT_LT(max_abs(r.stage2.betahat - beta), 1e-6);
    EXPECT_LT(max_abs(r.stage1.residuals), 1e-9);
    EXPECT_TRUE(r.stage1.rho_degenerate);
    EXPECT_TRUE(r.stage2.rho_degenerate);
    EXPECT_EQ(r.stage1.rhohat, Vector::Zero(1));
    EXPECT_EQ(r.stage2.rhohat, Vector::Zero(1));
  }
}

TEST(Koul2StageMde, ResidualsRecomputeExactly) {
  const RegressionData data = reference_setup(3, 0.4, DistributionFamily::Normal);
  const TwoStageResult r = koul_2stage_mde(data, WeightMatrix::default_weights(), kLeb, 1, kLeb);
  ASSERT_EQ(r.stage2.residuals.size(), 50);
  EXPECT_EQ(r.stage1.residuals, fitted_residuals(data.y, data.x, r.stage1.betahat));
  EXPECT_EQ(r.stage2.residuals, fitted_residuals(data.y, data.x, r.stage2.betahat));
  EXPECT_TRUE(r.stage2.betahat.allFinite() && r.stage2.rhohat.allFinite());
}

TEST(Koul2StageMde, StageOneIsDirectComposition) {
  const RegressionData data = reference_setup(4, 0.4, DistributionFamily::Laplace);
  OptimizerOptions opts;
  opts.restarts = 2;
  const TwoStageResult r = koul_2stage_mde(data, WeightMatrix::default_weights(), kLeb, 1, kDeg,
                                           opts);
  const LrEstimate lr = koul_lr_mde(data, WeightMatrix::default_weights(), kLeb, opts);
  const ArEstimate ar = koul_ar_mde({lr.residuals, 1}, kDeg, opts);
  EXPECT_EQ(r.stage1.betahat, lr.betahat);
  EXPECT_EQ(r.stage1.residuals, lr.residuals);
  EXPECT_EQ(r.stage1.rhohat, ar.rhohat);
}

TEST(Koul2StageMde, StageTwoRefitsOnTransformedData) {
  const RegressionData data = reference_setup(5, 0.4, DistributionFamily::Normal);
  const TwoStageResult r = koul_2stage_mde(data, WeightMatrix::default_weights(), kLeb, 1, kLeb);
  const TransformedData t = transform_data(data.y, data.x, r.stage1.rhohat);
  const LrEstimate lr2 = koul_lr_mde({t.y, t.x}, WeightMatrix::default_weights(), kLeb);
  EXPECT_EQ(r.stage2.betahat, lr2.betahat);
  const ArEstimate ar2 = koul_ar_mde({fitted_residuals(data.y, data.x, lr2.betahat), 1}, kLeb);
  EXPECT_EQ(r.stage2.rhohat, ar2.rhohat);
}

TEST(Koul2StageMde, ExplicitWeightsTruncated) {
  const RegressionData data = reference_setup(6, 0.4, DistributionFamily::Normal);
  const Matrix d = data.x;
  const TwoStageResult r =
      koul_2stage_mde(data, WeightMatrix::explicit_weights(d), kLeb, 1, kLeb);
  const TransformedData t = transform_data(data.y, data.x, r.stage1.rhohat);
  const LrEstimate lr2 =
      koul_lr_mde({t.y, t.x}, WeightMatrix::explicit_weights(d.bottomRows(49)), kLeb);
  EXPECT_EQ(r.stage2.betahat, lr2.betahat);
}

TEST(Koul2StageMde, ZeroRhoPipeline) {
  const RegressionData data = reference_setup(7, 0.0, DistributionFamily::Normal);
  const TwoStageResult r = koul_2stage_mde(data, WeightMatrix::default_weights(), kLeb, 1, kLeb);
  // With rho forced to 0 the second stage fit is the fit on the last n - q rows.
  const TransformedData t0 = transform_data(data.y, data.x, Vector::Zero(1));
  const LrEstimate dropped = koul_lr_mde({t0.y, t0.x}, WeightMatrix::default_weights(), kLeb);
  const LrEstimate direct = koul_lr_mde({data.y.tail(49), data.x.bottomRows(49)},
                                        WeightMatrix::default_weights(), kLeb);
  EXPECT_EQ(dropped.betahat, direct.betahat);
  // With the estimated small rho the two stages stay within sampling scale.
  EXPECT_LT(std::abs(r.stage1.rhohat(0)), 0.3);
  EXPECT_LT(max_abs(r.stage2.betahat - r.stage1.betahat), 0.05);
  EXPECT_LT(max_abs(r.stage2.betahat - dropped.betahat), 0.05);
}

TEST(Koul2StageMde, ReferenceSetupNearTruth) {
  const RegressionData data = reference_setup(8, 0.4, DistributionFamily::Normal);
  const TwoStageResult r = koul_2stage_mde(data, WeightMatrix::default_weights(), kLeb, 1, kLeb);
  EXPECT_LT(max_abs(r.stage2.betahat - Vector{{-2.0, 0.3, 1.5, -4.3}}), 0.5);
  EXPECT_NEAR(r.stage2.rhohat(0), 0.4, 0.3);
  EXPECT_FALSE(r.stage2.rho_degenerate);
}

TEST(Koul2StageMde, Errors) {
  const RegressionData small{Vector::LinSpaced(3, 1, 3), Matrix::Ones(3, 1)};
  try {
    koul_2stage_mde(small, WeightMatrix::default_weights(), kLeb, 3, kLeb);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Order);
  }
  Matrix x(5, 2);
  x.col(0) = Vector::Ones(5);
  x.col(1) = Vector::Ones(5);
  try {
    koul_2stage_mde({Vector::LinSpaced(5, 1, 5), x}, WeightMatrix::default_weights(), kLeb, 1,
                    kLeb);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Rank);
  }
}

}  // namespace
}  // namespace mde
