#include <gtest/gtest.h>

#include "mde/error.hpp"
#include "mde/generators.hpp"
#include "test_support.hpp"

namespace mde {
namespace {

const ErrorDistribution kNormal{DistributionFamily::Normal, 0.0, 5.0};

TEST(ArRecursion, ZeroRhoIsInnovations) {
  test::Rng rng(1);
  const Vector xi = rng.vector(20);
  EXPECT_EQ(ar_recursion(xi, Vector::Zero(3)), xi);
}

TEST(ArRecursion, ZeroInnovationsStayZero) {
  EXPECT_EQ(ar_recursion(Vector::Zero(10), Vector{{0.9, -0.5}}), Vector::Zero(10));
}

TEST(ArRecursion, HandValues) {
  const Vector x = ar_recursion(Vector{{1.0, 0.0, 2.0}}, Vector{{0.5, 0.25}});
  EXPECT_DOUBLE_EQ(x(0), 1.0);
  EXPECT_DOUBLE_EQ(x(1), 0.5);
  EXPECT_DOUBLE_EQ(x(2), 2.0 + 0.25 + 0.25);
}

TEST(GenLr, ShapesAndRange) {
  RandomStream s(2);
  const Vector beta{{-2.0, 0.3, 1.5}};
  const RegressionData d = gen_lr(50, beta, kNormal, s);
  EXPECT_EQ(d.n(), 50);
  EXPECT_EQ(d.p(), 3);
  EXPECT_GT(d.x.minCoeff(), 0.0);
  EXPECT_LT(d.x.maxCoeff(), kCovariateUpper);
}

TEST(GenLr, VanishingScaleIsExact) {
  RandomStream s(3);
  const Vector beta{{1.0, -1.0}};
  const RegressionData d = gen_lr(20, beta, {DistributionFamily::Normal, 0.0, 1e-12}, s);
  EXPECT_LT((d.y - d.x * beta).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(GenLr, Deterministic) {
  RandomStream a(4, 7), b(4, 7);
  const Vector beta{{1.0, 2.0}};
  const RegressionData x = gen_lr(30, beta, kNormal, a);
  const RegressionData y = gen_lr(30, beta, kNormal, b);
  EXPECT_EQ(x.x, y.x);
  EXPECT_EQ(x.y, y.y);
}

TEST(GenAr, ZeroRhoReturnsInnovations) {
  RandomStream a(5), b(5);
  const ARData d = gen_ar(40, Vector::Zero(2), kNormal, a);
  EXPECT_EQ(d.series, sample_errors(kNormal, 40, b));
  EXPECT_EQ(d.order, 2);
}

TEST(GenAr, FollowsRecursion) {
  RandomStream a(6), b(6);
  const Vector rho{{-0.2, 0.8, 0.4, -0.7}};
  const ErrorDistribution logis{DistributionFamily::Logistic, 0.0, 5.0};
  const ARData d = gen_ar(100, rho, logis, a);
  EXPECT_EQ(d.series, ar_recursion(sample_errors(logis, 100, b), rho));
  EXPECT_EQ(d.order, 4);
}

TEST(GenLrAr, ErrorsAreAutoregressive) {
  RandomStream a(7), b(7);
  const Vector beta{{-2.0, 0.3, 1.5, -4.3}};
  const Vector rho{{0.4}};
  const RegressionData d = gen_lr_ar(50, beta, rho, kNormal, a);
  // Reference draw order: design column by column, then innovations
  Matrix x(50, 4);
  for (Eigen::Index k = 0; k < 4; ++k)
    for (Eigen::Index i = 0; i < 50; ++i) x(i, k) = kCovariateUpper * b.uniform_open();
  const Vector xi = sample_errors(kNormal, 50, b);
  EXPECT_EQ(d.x, x);
  EXPECT_LT((d.y - x * beta - ar_recursion(xi, rho)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Generators, ShapeErrors) {
  RandomStream s(8);
  EXPECT_THROW(gen_lr(2, Vector::Ones(3), kNormal, s), Error);
  EXPECT_THROW(gen_ar(2, Vector::Ones(2), kNormal, s), Error);
}

}  // namespace
}  // namespace mde
