#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wnl/counterexamples.hpp"
#include "wnl/norms.hpp"
#include "wnl/sampling.hpp"

using namespace wnl;

namespace {

Polynomial fN(const LpSpace& X, int N) { return make_fN(Functional::coordinate(X, 0), N); }

using Comps = std::vector<std::pair<int, std::vector<cplx>>>;

/// Random diagonal polynomial with the listed degrees, returned together with
/// its raw coefficients for the oracle.
std::pair<Polynomial, Comps> diagonal_with(const LpSpace& X, std::vector<int> degrees, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Comps raw;
  std::vector<HomogeneousComponent> comps;
  for (int k : degrees) {
    std::vector<cplx> c(X.dim());
    for (auto& z : c) z = random_complex(rng);
    raw.emplace_back(k, c);
    comps.push_back(HomogeneousComponent::diagonal(k, c));
  }
  return {Polynomial(X, comps), raw};
}

}  // namespace

TEST(SNorm, FunctionalPower) {
  const LpSpace X(4, 2.0);
  for (int N : {1, 2, 3}) {
    for (double s : {0.3, 0.8}) {
      const auto r = s_norm(fN(X, N), s);
      EXPECT_NEAR(r.value, std::pow(s, N), 1e-10);
      EXPECT_LE(distance_to_basis_ray(r.witness, 0, s), 1e-4);
      EXPECT_NEAR(lp_norm(r.witness), s, 1e-9);
    }
  }
}

TEST(SNorm, Constant) {
  const LpSpace X(3, 2.0);
  EXPECT_NEAR(s_norm(Polynomial::constant(X, cplx{3, 4}), 0.4).value, 5.0, 1e-14);
}

TEST(SNorm, PrAtHalfRadius) {
  // |P_r| peaks at -s e_1: 5 s^2 + 7 s^3 = 2.125 at s = 0.5
  const auto P = make_Pr(2.0, 2, 0.5, 16);
  const auto r = s_norm(P, 0.5);
  EXPECT_NEAR(r.value, 2.125, 1e-9);
  EXPECT_LE(distance_to_basis_ray(r.witness, 0, 0.5), 1e-4);
}

TEST(SNorm, DiagonalOracle) {
  const LpSpace X(5, 2.0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto [P, raw] = diagonal_with(X, {2, 3}, seed);
    for (double s : {0.2, 0.6, 1.0}) EXPECT_NEAR(s_norm(P, s).value, oracle::diagonal_sup(raw, s), 1e-8);
  }
}

TEST(SNorm, Errors) {
  const LpSpace X(2, 2.0);
  EXPECT_THROW(s_norm(fN(X, 1), 0.0), Error);
  EXPECT_THROW(s_norm(fN(X, 1), 1.5), Error);
  OptimizerConfig bad;
  bad.max_iters = 0;
  EXPECT_THROW(s_norm(fN(X, 1), 0.5, bad), Error);
}

TEST(SupNorm, Examples) {
  const LpSpace X(4, 2.0);
  EXPECT_NEAR(sup_norm(fN(X, 3)).value, 1.0, 1e-10);
  EXPECT_NEAR(sup_norm(make_Q(2.0, 2, 16)).value, 2.0, 1e-6);
  const auto P = random_diagonal(X, 2, 77);
  EXPECT_NEAR(sup_norm(P.scaled(3.0)).value, 3.0 * sup_norm(P).value, 1e-8 * sup_norm(P).value);
}

TEST(VNorm, FunctionalSquare) {
  const LpSpace X(4, 2.0);
  const auto v = v_norm(fN(X, 2));
  EXPECT_NEAR(v.value, 0.25, 1e-12);
  const auto grid = oracle::weighted_radial_max([](double r) { return r * r; });
  EXPECT_NEAR(v.value, grid.first, 1e-10);
  EXPECT_NEAR(v.s_star, 1.0 / std::sqrt(2.0), 1e-4);
  EXPECT_FALSE(v.diagnostics.method_mismatch);
  EXPECT_FALSE(v.diagnostics.endpoint_argmax);
}

TEST(VNorm, Constant) {
  const LpSpace X(3, 2.0);
  const auto v = v_norm(Polynomial::constant(X, cplx{0, -2}));
  EXPECT_EQ(v.value, 2.0);
  EXPECT_EQ(v.s_star, 0.0);
}

TEST(VNorm, HomogeneousIdentity) {
  const LpSpace X(5, 2.0);
  for (int N = 1; N <= 4; ++N) {
    const auto P = random_diagonal(X, N, 100 + N, true);
    const double sup = sup_norm(P).value;
    EXPECT_NEAR(v_norm(P).value, delta_N(N) * sup, 1e-6 * sup) << N;
  }
}

TEST(VNorm, DiagonalOracle) {
  const LpSpace X(4, 2.0);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto [P, raw] = diagonal_with(X, {2, 3}, seed);
    const auto expect = oracle::weighted_radial_max([&raw = raw](double r) { return oracle::diagonal_sup(raw, r); });
    const auto v = v_norm(P);
    EXPECT_NEAR(v.value, expect.first, 1e-8);
    EXPECT_NEAR(v.s_star, expect.second, 1e-3);
    EXPECT_FALSE(v.diagnostics.method_mismatch);
  }
}

TEST(VNorm, RestrictionToSN) {
  const LpSpace X(3, 2.0);
  const auto P = random_diagonal(X, 3, 5);
  EXPECT_NEAR(v_norm(P).value, v_norm_on(P, X, 1.0, OptimizerConfig{}).value, 1e-8);
}

TEST(VNorm, ScalingEquivariance) {
  const LpSpace X(3, 3.0);
  const auto P = random_diagonal(X, 2, 6);
  const auto v = v_norm(P);
  const auto v2 = v_norm(P.scaled(2.5));
  EXPECT_NEAR(v2.value, 2.5 * v.value, 1e-8 * v.value);
  EXPECT_NEAR(weighted_value(P.scaled(2.5), v.witness), v2.value, 1e-8 * v.value);
}

TEST(VNorm, DeterministicGivenSeed) {
  const LpSpace X(3, 2.0);
  const auto P = random_diagonal(X, 3, 8);
  OptimizerConfig cfg;
  cfg.seed = 99;
  const auto a = v_norm(P, cfg), b = v_norm(P, cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness.data(), b.witness.data());
}

TEST(LowerBoundLemma, LinearEquality) {
  const LpSpace X(3, 2.0);
  const auto r = check_lower_bound_lemma(fN(X, 1), 0.5);
  EXPECT_NEAR(r.rhs, 0.5, 1e-10);
  EXPECT_NEAR(r.lhs, 0.5, 1e-10);
  EXPECT_TRUE(r.holds);
}

TEST(LowerBoundLemma, NearOneRecoversSup) {
  const LpSpace X(3, 2.0);
  const auto P = random_diagonal(X, 2, 12);
  const auto r = check_lower_bound_lemma(P, 1.0 - 1e-9);
  EXPECT_NEAR(r.rhs, r.sup_norm, 1e-6);
  EXPECT_TRUE(r.holds);
}

TEST(LowerBoundLemma, RandomCubicOnGrid) {
  const LpSpace X(6, 2.0);
  const auto P = random_diagonal(X, 3, 31);
  const auto sup = sup_norm(P);
  for (int i = 1; i <= 20; ++i) {
    const double s = i / 21.0;
    const auto r = check_lower_bound_lemma(P, s, {}, &sup);
    EXPECT_GE(r.lhs - r.rhs, -1e-8) << s;
  }
}

TEST(Equivalence, HomogeneousIsTightByConstruction) {
  const LpSpace X(3, 2.0);
  for (int N = 1; N <= 4; ++N) {
    const auto r = check_equivalence(fN(X, N), 0.5);
    // ||f_N||_s = s^N and s(alpha,N)^N = 1 - alpha N!/N^{N+1} >= 1 - alpha
    EXPECT_NEAR(r.s_alpha_norm, std::pow(r.s_alpha, N), 1e-10);
    EXPECT_TRUE(r.holds());
  }
}

TEST(Equivalence, ConstantAndRandom) {
  const LpSpace X(3, 2.0);
  EXPECT_TRUE(check_equivalence(Polynomial::constant(X, 2.0), 0.3).holds());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto P = random_diagonal(X, 1 + static_cast<int>(seed % 4), seed);
    const auto sup = sup_norm(P);
    const auto v = v_norm(P);
    for (double a : {0.1, 0.5, 0.9}) EXPECT_TRUE(check_equivalence(P, a, {}, &sup, &v).holds());
  }
}

TEST(Attainment, FunctionalSquareWitness) {
  const LpSpace X(4, 2.0);
  const auto P = fN(X, 2);
  const auto w = attainment_witness(P, v_norm(P));
  EXPECT_NEAR(w.s_star, std::sqrt(2.0 / 4.0), 1e-4);
  EXPECT_LE(distance_to_basis_ray(w.point, 0, w.s_star), 1e-4);
  EXPECT_LE(w.margin, 1e-8);
  EXPECT_THROW(attainment_witness(P, sup_norm(P)), Error);
}

TEST(Attainment, DenseGridOnPlane) {
  // l_2^2, real and imaginary parts of both coordinates on a grid
  const LpSpace X(2, 2.0);
  const Polynomial P(X, {HomogeneousComponent::diagonal(1, {cplx{0.3, 0.1}, -0.2}),
                         HomogeneousComponent::functional_power(2, std::vector<cplx>{0.6, cplx{0, 0.8}})});
  const auto v = v_norm(P);
  const auto w = attainment_witness(P, v);
  EXPECT_LE(w.margin, 1e-6);
  EXPECT_LT(lp_norm(w.point), 1.0);
  double grid_best = 0.0;
  const int m = 24;
  for (int a = -m; a <= m; ++a)
    for (int b = -m; b <= m; ++b)
      for (int c = -m; c <= m; ++c)
        for (int d = -m; d <= m; ++d) {
          const LpVector y(X, {cplx(a, b) / double(m), cplx(c, d) / double(m)});
          if (lp_norm(y) < 1.0) grid_best = std::max(grid_best, weighted_value(P, y));
        }
  EXPECT_GE(v.value, grid_best - 1e-12);
  EXPECT_LE(v.value, grid_best + 0.05);
}

TEST(Attainment, WitnessFeasibility) {
  const LpSpace X(3, 1.5);
  const auto P = random_diagonal(X, 3, 44);
  const auto s = s_norm(P, 0.6);
  EXPECT_NEAR(lp_norm(s.witness), 0.6, 1e-9);
  EXPECT_NEAR(s.value, std::abs(P(s.witness)), 1e-10);
  const auto v = v_norm(P);
  EXPECT_NEAR(lp_norm(v.witness), v.s_star, 1e-9);
  EXPECT_NEAR(v.value, weighted_value(P, v.witness), 1e-10);
}
