#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wnl/sampling.hpp"
#include "wnl/space.hpp"

using namespace wnl;

TEST(LpSpace, RejectsBadParameters) {
  EXPECT_THROW(LpSpace(0, 2.0), Error);
  EXPECT_THROW(LpSpace(3, 0.5), Error);
  EXPECT_NO_THROW(LpSpace(3, kInfinity));
}

TEST(LpSpace, DualExponent) {
  EXPECT_DOUBLE_EQ(LpSpace(2, 2.0).dual_exponent(), 2.0);
  EXPECT_DOUBLE_EQ(LpSpace(2, 3.0).dual_exponent(), 1.5);
  EXPECT_TRUE(std::isinf(LpSpace(2, 1.0).dual_exponent()));
  EXPECT_DOUBLE_EQ(LpSpace(2, kInfinity).dual_exponent(), 1.0);
}

TEST(LpNorm, Examples) {
  const LpSpace X4(4, 2.0);
  EXPECT_EQ(lp_norm(LpVector::zero(X4)), 0.0);
  EXPECT_DOUBLE_EQ(lp_norm(LpVector::basis(X4, 0)), 1.0);
  EXPECT_NEAR(lp_norm(LpVector(LpSpace(2, 2.0), {1.0, 1.0})), 1.41421356237, 1e-10);
}

TEST(LpNorm, OtherExponents) {
  const std::vector<cplx> v{cplx{0, 3}, 4.0};
  EXPECT_NEAR(lp_norm(LpVector(LpSpace(2, 2.0), v)), 5.0, 1e-14);
  EXPECT_NEAR(lp_norm(LpVector(LpSpace(2, 1.0), v)), 7.0, 1e-14);
  EXPECT_NEAR(lp_norm(LpVector(LpSpace(2, kInfinity), v)), 4.0, 1e-14);
  EXPECT_NEAR(lp_norm(LpVector(LpSpace(2, 3.0), {1.0, 1.0})), std::cbrt(2.0), 1e-14);
  // large and tiny entries stay finite
  EXPECT_NEAR(lp_norm(LpVector(LpSpace(2, 2.0), {3e200, 4e200})), 5e200, 1e186);
  EXPECT_NEAR(lp_norm(LpVector(LpSpace(2, 2.0), {3e-200, 4e-200})), 5e-200, 1e-214);
}

TEST(DualityFunctional, Examples) {
  const LpSpace X3(3, 2.0);
  const auto f1 = duality_functional(LpVector::basis(X3, 0));
  EXPECT_NEAR(std::abs(f1.data()[0] - cplx{1.0}), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f1(LpVector::basis(X3, 0)) - cplx{1.0}), 0.0, 1e-15);

  const LpVector x(LpSpace(2, 2.0), {3.0, 4.0});
  const auto f = duality_functional(x);
  EXPECT_NEAR(f.data()[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(f.data()[1].real(), 0.8, 1e-15);
  EXPECT_NEAR(std::abs(f(x) - cplx{5.0}), 0.0, 1e-14);
  EXPECT_NEAR(f.dual_norm(), 1.0, 1e-15);
}

TEST(DualityFunctional, HolderOnRandomVectors) {
  std::mt19937_64 rng(11);
  for (double p : {1.0, 1.3, 2.0, 5.0, kInfinity}) {
    const LpSpace X(5, p);
    const LpVector x = random_point(X, rng, 3.0);
    const auto f = duality_functional(x);
    EXPECT_NEAR(f.dual_norm(), 1.0, 1e-12) << "p=" << p;
    EXPECT_NEAR(std::abs(f(x) - cplx{lp_norm(x)}), 0.0, 1e-12) << "p=" << p;
    for (int i = 0; i < 100; ++i) {
      const LpVector y = random_point(X, rng, 3.0);
      EXPECT_LE(std::abs(f(y)), lp_norm(y) * (1.0 + 1e-12));
    }
  }
}

TEST(DualityFunctional, ZeroVectorThrows) {
  try {
    duality_functional(LpVector::zero(LpSpace(3, 2.0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(DistToSpan, Examples) {
  const LpSpace X(3, 2.0);
  const LpVector x(X, {1.0, cplx{0.5, -0.2}, 0.3});
  EXPECT_NEAR(dist_to_span(x.scaled(cplx{0, 3}), x), 0.0, 1e-10);
  EXPECT_NEAR(dist_to_span(LpVector::basis(X, 1), LpVector::basis(X, 0)), 1.0, 1e-12);
}

TEST(DistToSpan, MatchesHilbertProjection) {
  std::mt19937_64 rng(5);
  const LpSpace X(6, 2.0);
  for (int t = 0; t < 50; ++t) {
    const LpVector x = random_point(X, rng, 2.0);
    const LpVector y = random_point(X, rng, 2.0);
    EXPECT_NEAR(dist_to_span(y, x), oracle::hilbert_distance(y.data(), x.data()), 1e-10);
  }
}

TEST(DistToSpan, NonHilbertAgainstGrid) {
  // l_3 in two complex dimensions: brute-force the complex multiplier.
  const LpSpace X(2, 3.0);
  const LpVector x(X, {1.0, cplx{0.4, 0.3}});
  const LpVector y(X, {cplx{0.2, 1.0}, -0.7});
  double best = 1e300;
  for (int i = -400; i <= 400; ++i)
    for (int j = -400; j <= 400; ++j) {
      const cplx lam{i / 200.0, j / 200.0};
      best = std::min(best, lp_norm(y - x.scaled(lam)));
    }
  const double d = dist_to_span(y, x);
  EXPECT_LE(d, best + 1e-12);
  EXPECT_GE(d, best - 1e-4);
}

TEST(ModulusOfConvexity, Examples) {
  const LpSpace H(2, 2.0);
  EXPECT_EQ(modulus_of_convexity(H, 0.0), 0.0);
  EXPECT_NEAR(modulus_of_convexity(H, 2.0), 1.0, 1e-15);
  // 1 - sqrt(1 - x) = x / (1 + sqrt(1 - x)) without cancellation
  EXPECT_NEAR(modulus_of_convexity(H, 0.02), 1e-4 / (1.0 + std::sqrt(1.0 - 1e-4)), 1e-18);
  EXPECT_NEAR(modulus_of_convexity(LpSpace(2, 1.5), 1.0), 0.5 / 8.0, 1e-15);
  EXPECT_THROW(modulus_of_convexity(LpSpace(2, 1.0), 0.5), Error);
  EXPECT_THROW(modulus_of_convexity(LpSpace(2, kInfinity), 0.5), Error);
  EXPECT_THROW(modulus_of_convexity(H, 2.5), Error);
}

TEST(ModulusOfConvexity, LowerBoundsEmpiricalMidpointGap) {
  std::mt19937_64 rng(3);
  for (double p : {1.5, 2.0, 3.0}) {
    const LpSpace X(3, p);
    for (int t = 0; t < 2000; ++t) {
      const LpVector x = random_unit(X, rng), y = random_unit(X, rng);
      const double gap = 1.0 - lp_norm((x + y).scaled(0.5));
      EXPECT_LE(modulus_of_convexity(X, std::min(2.0, lp_norm(x - y))), gap + 1e-8);
    }
  }
}

TEST(Weight, StandardProfile) {
  const Weight w = standard_weight();
  EXPECT_EQ(weight_eval(w, 1.0), 0.0);
  EXPECT_EQ(weight_eval(w, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(weight_eval(w, 0.5), 0.75);
  double prev = 2.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = weight_eval(w, i / 100.0);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_THROW(weight_eval(w, 1.5), Error);
}
