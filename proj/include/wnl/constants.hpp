#ifndef WNL_CONSTANTS_HPP
#define WNL_CONSTANTS_HPP

// Degree-dependent constants relating the weighted, s- and sup-norms of
// polynomials, plus the slack function mu of the localization estimate.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wnl/error.hpp"
#include "wnl/optimize.hpp"
#include "wnl/space.hpp"

namespace wnl {

/// n^n/n! overflows doubles long before it matters; every constant that needs
/// it is restricted to N <= 30.
inline constexpr int kMaxDegree = 30;

namespace detail {

inline void require_degree(int N, const char* what) {
  if (N < 1 || N > kMaxDegree)
    throw Error(ErrorCode::OutOfDomain, std::string(what) + ": degree must lie in [1, 30], got " + std::to_string(N));
}

/// n^n / n! as the product of n/j, j = 1..n.
inline double power_over_factorial(int n) {
  double acc = 1.0;
  for (int j = 1; j <= n; ++j) acc *= static_cast<double>(n) / j;
  return acc;
}

}  // namespace detail

/// sup_{r in [0,1]} (r^N - r^{N+2}), attained at r = sqrt(N/(N+2)).
inline double delta_N(int N) {
  if (N < 1) throw Error(ErrorCode::OutOfDomain, "delta_N: degree must be >= 1");
  const double q = static_cast<double>(N) / (N + 2);
  return std::pow(q, N / 2.0) - std::pow(q, (N + 2) / 2.0);
}

/// Radius whose s-norm already controls (1 - alpha) of the sup-norm.
inline double s_alpha_N(double alpha, int N) {
  detail::require_degree(N, "s_alpha_N");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::OutOfDomain, "s_alpha_N: alpha must lie in (0, 1)");
  const double ratio = 1.0 / (N * detail::power_over_factorial(N));  // N!/N^{N+1}
  // for large N the exact value is within half an ulp of 1; keep it inside (0, 1)
  return std::min(std::pow(1.0 - alpha * ratio, 1.0 / N), std::nextafter(1.0, 0.0));
}

/// 1 - sum_{n=1}^N (1 - s^n) n^n/n!, the lower-bound factor ||P||_s >= c(s) ||P||_inf.
inline double lemma_coefficient(double s, int N) {
  detail::require_degree(N, "lemma_coefficient");
  double acc = 0.0;
  for (int n = 1; n <= N; ++n) acc += (1.0 - std::pow(s, n)) * detail::power_over_factorial(n);
  return 1.0 - acc;
}

struct SOfN {
  double s;      ///< the radius s(N)
  double z;      ///< argmax of f(s) = (1 - s^2) c(s) on [0, 1]
  double f_max;  ///< f(z)
};

/// Smallest radius s(N) in (z, 1) with 1 - s(N)^2 <= max f, nudged up by
/// min(1e-9, (1 - s)/2) so the inequality is strict and s(N) stays below 1.
/// The v-norm supremum over s is reached on [0, s(N)].
///
/// For large N the maximizer z sits within 1e-12 of 1, so f is scanned in
/// tau = -log(1 - s) with 1 - s^n evaluated without cancellation.
inline SOfN s_of_N_detail(int N) {
  detail::require_degree(N, "s_of_N");
  auto f = [N](double tau) {
    const double u = std::exp(-tau);  // 1 - s
    const double log_s = std::log1p(-u);
    double acc = 0.0;
    for (int n = 1; n <= N; ++n) acc += -std::expm1(n * log_s) * detail::power_over_factorial(n);
    return u * (2.0 - u) * (1.0 - acc);
  };
  const auto best = opt::grid_then_golden(f, 0.0, 45.0, 20001, 1e-10);
  if (!(best.value > 0.0)) throw Error(ErrorCode::NonPositiveMax, "max of (1-s^2)c(s) is not positive");
  const double u0 = best.value / (1.0 + std::sqrt(1.0 - best.value));  // 1 - sqrt(1 - f(z))
  const double z = -std::expm1(-best.arg);
  return {1.0 - u0 + std::min(1e-9, u0 / 2.0), z, best.value};
}

inline double s_of_N(int N) { return s_of_N_detail(N).s; }

/// Lipschitz-type constant: ||P||_Lip(B) <= ||P||_v M_N / 4 for deg P <= N.
inline double M_N(int N) {
  detail::require_degree(N, "M_N");
  const double s = s_alpha_N(0.5, N);
  double sum = 0.0;
  for (int n = 1; n <= N; ++n) sum += std::ldexp(detail::power_over_factorial(n), 2 * n - 1);
  return 8.0 / (1.0 - s * s) * sum;
}

/// mu(rho) = rho^2 delta(2 rho^2)^2 / 16 with delta the modulus of convexity.
inline double mu(double rho, const LpSpace& space) {
  space.require_uniformly_convex("mu");
  if (!(rho >= 0.0 && rho <= 1.0)) throw Error(ErrorCode::OutOfDomain, "mu: rho must lie in [0, 1]");
  const double d = modulus_of_convexity(space, 2.0 * rho * rho);
  return rho * rho * d * d / 16.0;
}

inline double eta(double eps, int N, const LpSpace& space) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::OutOfDomain, "eta: eps must lie in (0, 1)");
  return mu(eps / (2.0 * M_N(N)), space);
}

struct ConstantsRow {
  int N;
  double delta_N;
  double s_N;
  double s_half_N;
  double M_N;
};

/// Rows N = 1..n_max, computed once.
class ConstantsTable {
 public:
  explicit ConstantsTable(int n_max) {
    detail::require_degree(n_max, "ConstantsTable");
    rows_.reserve(static_cast<std::size_t>(n_max));
    for (int N = 1; N <= n_max; ++N)
      rows_.push_back({N, delta_N(N), s_of_N(N), s_alpha_N(0.5, N), wnl::M_N(N)});
  }

  const std::vector<ConstantsRow>& rows() const noexcept { return rows_; }
  const ConstantsRow& at(int N) const {
    if (N < 1 || N > static_cast<int>(rows_.size())) throw Error(ErrorCode::OutOfRange, "no row for this degree");
    return rows_[static_cast<std::size_t>(N - 1)];
  }

 private:
  std::vector<ConstantsRow> rows_;
};

}  // namespace wnl

#endif  // WNL_CONSTANTS_HPP
