#ifndef WNL_TESTS_ORACLES_HPP
#define WNL_TESTS_ORACLES_HPP

// Independent reference computations for the tests. Nothing here calls the
// optimizers of the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Exact sup of |sum_k sum_n c_k(n) x_n^k| over the l_p sphere of radius s
/// when every degree k >= p: all mass on one coordinate, phases aligned.
inline double diagonal_sup(const std::vector<std::pair<int, std::vector<cplx>>>& comps, double s) {
  const std::size_t n = comps.front().second.size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const auto& [k, c] : comps) acc += std::abs(c[i]) * std::pow(s, k);
    best = std::max(best, acc);
  }
  return best;
}

/// max over r in [0,1] of (1 - r^2) g(r) by a dense grid plus local refinement.
template <class G>
inline std::pair<double, double> weighted_radial_max(G g, int points = 200001) {
  double best = -1.0, arg = 0.0;
  for (int i = 0; i <= points; ++i) {
    const double r = static_cast<double>(i) / points;
    const double v = (1.0 - r * r) * g(r);
    if (v > best) best = v, arg = r;
  }
  double h = 1.0 / points;
  for (int round = 0; round < 40; ++round) {
    for (double r : {arg - h, arg + h}) {
      if (r < 0.0 || r > 1.0) continue;
      const double v = (1.0 - r * r) * g(r);
      if (v > best) best = v, arg = r;
    }
    h /= 2.0;
  }
  return {best, arg};
}

/// Euclidean distance from y to the complex line through x.
inline double hilbert_distance(const std::vector<cplx>& y, const std::vector<cplx>& x) {
  cplx yx{};
  double xx = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    yx += y[i] * std::conj(x[i]);
    xx += std::norm(x[i]);
    yy += std::norm(y[i]);
  }
  return std::sqrt(std::max(0.0, yy - std::norm(yx) / xx));
}

}  // namespace oracle

#endif  // WNL_TESTS_ORACLES_HPP
