#ifndef WNL_SAMPLING_HPP
#define WNL_SAMPLING_HPP

// Seeded random polynomials and points for experiments and property checks.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "wnl/norms.hpp"
#include "wnl/polynomial.hpp"
#include "wnl/space.hpp"

namespace wnl {

/// Diagonal polynomial with standard complex Gaussian coefficients in every
/// degree 1..N (only degree N when `homogeneous`).
inline Polynomial random_diagonal(const LpSpace& X, int N, std::uint64_t seed, bool homogeneous = false) {
  if (N < 1) throw Error(ErrorCode::OutOfDomain, "random_diagonal needs N >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<HomogeneousComponent> comps;
  for (int k = homogeneous ? N : 1; k <= N; ++k) {
    std::vector<cplx> c(X.dim());
    for (auto& z : c) z = cplx{gauss(rng), gauss(rng)};
    comps.push_back(HomogeneousComponent::diagonal(k, std::move(c)));
  }
  return Polynomial(X, std::move(comps));
}

/// Diagonal components in degrees 1..N-1 and a power f^N of a Gaussian
/// functional on top, so the polynomial is neither diagonal nor homogeneous.
inline Polynomial random_mixed(const LpSpace& X, int N, std::uint64_t seed) {
  if (N < 1) throw Error(ErrorCode::OutOfDomain, "random_mixed needs N >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<HomogeneousComponent> comps;
  for (int k = 1; k <= N; ++k) {
    std::vector<cplx> c(X.dim());
    for (auto& z : c) z = cplx{gauss(rng), gauss(rng)};
    if (k < N)
      comps.push_back(HomogeneousComponent::diagonal(k, std::move(c)));
    else
      comps.push_back(HomogeneousComponent::functional_power(k, std::move(c), 1.0 / std::sqrt(2.0 * X.dim())));
  }
  return Polynomial(X, std::move(comps));
}

/// Uniform direction, radius uniform in [0, max_radius).
inline LpVector random_point(const LpSpace& X, std::mt19937_64& rng, double max_radius = 1.0) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = max_radius * unif(rng);
  return LpVector(X, detail::random_direction(rng, X.dim(), X.p(), r));
}

inline LpVector random_unit(const LpSpace& X, std::mt19937_64& rng) {
  return LpVector(X, detail::random_direction(rng, X.dim(), X.p(), 1.0));
}

inline cplx random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  return {gauss(rng), gauss(rng)};
}

}  // namespace wnl

#endif  // WNL_SAMPLING_HPP
