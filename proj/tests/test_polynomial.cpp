#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wnl/polynomial.hpp"
#include "wnl/sampling.hpp"

using namespace wnl;

namespace {

std::vector<cplx> hand_apply(double a, double b, const std::vector<cplx>& u, const std::vector<cplx>& g,
                             const std::vector<cplx>& y) {
  cplx gy{};
  for (std::size_t i = 0; i < y.size(); ++i) gy += g[i] * y[i];
  std::vector<cplx> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = a * y[i] + b * gy * u[i];
  return out;
}

}  // namespace

TEST(Polynomial, EvaluationExamples) {
  const LpSpace X2(2, 2.0);
  EXPECT_EQ(Polynomial::constant(X2, cplx{2, -1})(LpVector(X2, {0.3, 0.1})), cplx(2, -1));

  const Polynomial sq(X2, {HomogeneousComponent::diagonal(2, {1.0, 0.0})});
  EXPECT_NEAR(std::abs(sq(LpVector(X2, {0.5, 0.3})) - cplx{0.25}), 0.0, 1e-15);

  const LpSpace X4(4, 2.0);
  const Polynomial f2(X4, {HomogeneousComponent::functional_power(2, Functional::coordinate(X4, 0))});
  EXPECT_NEAR(std::abs(f2(LpVector::basis(X4, 0)) - cplx{1.0}), 0.0, 1e-15);
}

TEST(Polynomial, DegreeAndValidation) {
  const LpSpace X(3, 2.0);
  const Polynomial P(X, {HomogeneousComponent::diagonal(3, {1.0, 0.0, 0.0}), HomogeneousComponent::constant(1.0),
                         HomogeneousComponent::diagonal(1, {0.0, 1.0, 0.0})});
  EXPECT_EQ(P.degree(), 3);
  EXPECT_FALSE(P.is_homogeneous());
  EXPECT_THROW(Polynomial(X, {HomogeneousComponent::diagonal(2, {1.0, 2.0})}), Error);
  EXPECT_THROW(Polynomial(X, {HomogeneousComponent::diagonal(2, {1.0, 2.0, 3.0}),
                              HomogeneousComponent::diagonal(2, {1.0, 2.0, 3.0})}),
               Error);
}

TEST(Polynomial, DiagonalComponentMatchesSum) {
  std::mt19937_64 rng(1);
  const LpSpace X(5, 3.0);
  const auto P = random_diagonal(X, 3, 42, true);
  const auto& c = P.components().front().coeffs();
  for (int t = 0; t < 20; ++t) {
    const LpVector y = random_point(X, rng);
    cplx expected{};
    for (std::size_t i = 0; i < X.dim(); ++i) expected += c[i] * y[i] * y[i] * y[i];
    EXPECT_NEAR(std::abs(component_eval(P, 3, y) - expected), 0.0, 1e-13);
  }
}

TEST(Polynomial, ComponentsSumAndHomogeneity) {
  std::mt19937_64 rng(2);
  const LpSpace X(4, 2.0);
  const Functional f(X, {0.3, cplx{0, 0.4}, -0.2, 0.1});
  const Polynomial P(X, {HomogeneousComponent::constant(cplx{0.5, 0.5}), HomogeneousComponent::diagonal(1, {1.0, 2.0, 3.0, 4.0}),
                         HomogeneousComponent::functional_power(3, f, cplx{0, 2})});
  for (int t = 0; t < 20; ++t) {
    const LpVector y = random_point(X, rng);
    const cplx lam = random_complex(rng);
    cplx sum{};
    for (int k : {0, 1, 3}) {
      sum += component_eval(P, k, y);
      EXPECT_NEAR(std::abs(component_eval(P, k, y.scaled(lam)) - ipow(lam, k) * component_eval(P, k, y)), 0.0,
                  1e-12 * std::max(1.0, std::abs(component_eval(P, k, y))));
    }
    EXPECT_NEAR(std::abs(sum - P(y)), 0.0, 1e-12);
    // functional power: scale * f(y)^3
    const cplx fy = f(y);
    EXPECT_NEAR(std::abs(component_eval(P, 3, y) - cplx{0, 2} * fy * fy * fy), 0.0, 1e-13);
  }
}

TEST(Polynomial, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(3);
  const LpSpace X(3, 2.0);
  const auto P = random_diagonal(X, 3, 9).with_operator(make_T(0.3, LpVector(X, {1.0, 0.5, cplx{0, 0.2}})));
  const LpVector y = random_point(X, rng);
  std::vector<cplx> grad(3);
  P.value_and_gradient(y.coords(), grad);
  // holomorphic: dP/dy_i by a complex central difference
  for (std::size_t i = 0; i < 3; ++i) {
    const double h = 1e-6;
    auto yp = y.data(), ym = y.data();
    yp[i] += h;
    ym[i] -= h;
    const cplx fd = (P.value(yp) - P.value(ym)) / (2.0 * h);
    EXPECT_NEAR(std::abs(grad[i] - fd), 0.0, 1e-7);
  }
}

TEST(Projection, Examples) {
  std::mt19937_64 rng(4);
  const LpSpace X(4, 2.0);
  const LpVector x(X, {1.0, cplx{0, 2}, -0.5, 0.25});
  const auto Px = make_projection(x);
  EXPECT_LE(lp_norm(Px(x) - x), 1e-12);
  double xx = 0.0;
  for (auto c : x.coords()) xx += std::norm(c);
  for (int t = 0; t < 100; ++t) {
    const LpVector y = random_point(X, rng, 3.0);
    cplx yx{};
    for (std::size_t i = 0; i < 4; ++i) yx += y[i] * std::conj(x[i]);
    const LpVector orth = x.scaled(yx / xx);
    EXPECT_LE(lp_norm(Px(y) - orth), 1e-10);
  }
}

TEST(Projection, NormOneAndIdempotent) {
  std::mt19937_64 rng(5);
  for (double p : {1.2, 2.0, 4.0, kInfinity}) {
    const LpSpace X(5, p);
    const LpVector x = random_point(X, rng, 2.0);
    const auto Px = make_projection(x);
    for (int t = 0; t < 100; ++t) {
      const LpVector y = random_point(X, rng, 2.0);
      EXPECT_LE(lp_norm(Px(y)), lp_norm(y) + 1e-12);
      EXPECT_LE(lp_norm(Px(Px(y)) - Px(y)), 1e-12);
    }
  }
  EXPECT_THROW(make_projection(LpVector::zero(LpSpace(2, 2.0))), Error);
}

TEST(OperatorT, Examples) {
  const LpSpace X(2, 2.0);
  const auto T = make_T(0.5, LpVector::basis(X, 0));
  const LpVector Ty = T(LpVector::basis(X, 1));
  EXPECT_NEAR(std::abs(Ty[1] - cplx{0.5}), 0.0, 1e-15);
  EXPECT_NEAR(lp_norm(Ty), 0.5, 1e-15);

  std::mt19937_64 rng(6);
  const LpSpace X3(3, 3.0);
  const LpVector x = random_point(X3, rng);
  EXPECT_LE(lp_norm(make_T(0.7, x)(x) - x), 1e-12);
  const auto I = make_T(0.0, x);
  const LpVector y = random_point(X3, rng);
  EXPECT_LE(lp_norm(I(y) - y), 0.0);
  EXPECT_THROW(make_T(1.0, x), Error);
}

TEST(Precompose, IdentityAndFixedPoint) {
  std::mt19937_64 rng(7);
  const LpSpace X(3, 2.0);
  const auto P = random_diagonal(X, 3, 17);
  const LpVector x = random_point(X, rng);
  const auto PI = precompose(P, make_T(0.0, x));
  for (int t = 0; t < 100; ++t) {
    const LpVector y = random_point(X, rng);
    EXPECT_NEAR(std::abs(PI(y) - P(y)), 0.0, 1e-13);
  }
  const auto PT = precompose(P, make_T(0.4, x));
  EXPECT_NEAR(std::abs(PT(x) - P(x)), 0.0, 1e-12);
  EXPECT_EQ(PT.degree(), P.degree());
}

TEST(Precompose, ChainMatchesHandComposition) {
  std::mt19937_64 rng(8);
  const LpSpace X(3, 2.5);
  const auto P = random_diagonal(X, 2, 23);
  const auto T1 = make_T(0.3, random_point(X, rng));
  const auto T2 = make_T(0.6, random_point(X, rng));
  const auto PT = precompose(precompose(P, T1), T2);  // P o T1 o T2
  ASSERT_EQ(PT.chain().size(), 2u);
  for (int t = 0; t < 20; ++t) {
    const LpVector y = random_point(X, rng);
    const auto z2 = hand_apply(T2.a(), T2.b(), T2.u(), T2.g(), y.data());
    const auto z1 = hand_apply(T1.a(), T1.b(), T1.u(), T1.g(), z2);
    EXPECT_NEAR(std::abs(PT(y) - P.value(z1)), 0.0, 1e-12);
  }
}
