#ifndef WNL_OPTIMIZE_HPP
#define WNL_OPTIMIZE_HPP

// Small derivative-free scalar and planar optimizers used by the rest of the
// library: golden-section refinement of a 1-D supremum and a Nelder-Mead
// simplex in the plane.

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace wnl::opt {

struct ScalarOptimum {
  double arg = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for the maximum of `f` on [lo, hi]. Returns the best
/// point seen, endpoints included, so a monotone `f` reports the right end.
template <class F>
ScalarOptimum golden_maximize(F&& f, double lo, double hi, double tol = 1e-10, int max_evals = 400) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (hi < lo) std::swap(lo, hi);

  ScalarOptimum best{lo, f(lo), 1};
  auto consider = [&best](double x, double fx) {
    if (fx > best.value) {
      best.arg = x;
      best.value = fx;
    }
  };
  {
    double fhi = f(hi);
    ++best.evaluations;
    consider(hi, fhi);
  }

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  best.evaluations += 2;
  consider(c, fc);
  consider(d, fd);

  while (b - a > tol && best.evaluations < max_evals) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
    ++best.evaluations;
  }
  return best;
}

/// Grid scan of `points` equispaced abscissae followed by golden refinement
/// inside the bracket around the best grid cell.
template <class F>
ScalarOptimum grid_then_golden(F&& f, double lo, double hi, int points, double tol = 1e-10) {
  points = std::max(points, 3);
  double best_x = lo, best_f = f(lo);
  int best_i = 0;
  for (int i = 1; i < points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best_x = x;
      best_i = i;
    }
  }
  const double h = (hi - lo) / static_cast<double>(points - 1);
  const double a = std::max(lo, lo + h * (best_i - 1));
  const double b = std::min(hi, lo + h * (best_i + 1));
  ScalarOptimum refined = golden_maximize(f, a, b, tol);
  refined.evaluations += points;
  if (best_f > refined.value) {
    refined.arg = best_x;
    refined.value = best_f;
  }
  return refined;
}

struct PlanarOptimum {
  std::array<double, 2> arg{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Nelder-Mead minimization in R^2. Converges when the simplex diameter drops
/// below `tol * max(1, |best|)`.
template <class F>
PlanarOptimum nelder_mead_2d(F&& f, std::array<double, 2> start, double initial_step, double tol = 1e-12,
                             int max_iters = 4000) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> simplex{start, start, start};
  simplex[1][0] += initial_step;
  simplex[2][1] += initial_step;
  std::array<double, 3> values{f(simplex[0]), f(simplex[1]), f(simplex[2])};

  auto lerp = [](const Point& a, const Point& b, double t) {
    return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };
  auto dist = [](const Point& a, const Point& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); };

  PlanarOptimum out;
  for (int it = 0; it < max_iters; ++it) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return values[i] < values[j]; });
    const Point best = simplex[order[0]];
    const Point mid = simplex[order[1]];
    const Point worst = simplex[order[2]];
    const double f_best = values[order[0]], f_mid = values[order[1]], f_worst = values[order[2]];

    const double diameter = std::max({dist(best, mid), dist(best, worst), dist(mid, worst)});
    const double scale = std::max(1.0, std::hypot(best[0], best[1]));
    out.iterations = it;
    if (diameter < tol * scale) {
      out.converged = true;
      break;
    }

    const Point centroid{(best[0] + mid[0]) / 2.0, (best[1] + mid[1]) / 2.0};
    const Point reflected = lerp(centroid, worst, -1.0);
    const double f_reflected = f(reflected);

    if (f_reflected < f_best) {
      const Point expanded = lerp(centroid, worst, -2.0);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[order[2]] = expanded;
        values[order[2]] = f_expanded;
      } else {
        simplex[order[2]] = reflected;
        values[order[2]] = f_reflected;
      }
      continue;
    }
    if (f_reflected < f_mid) {
      simplex[order[2]] = reflected;
      values[order[2]] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < f_worst;
    const Point contracted = outside ? lerp(centroid, reflected, 0.5) : lerp(centroid, worst, 0.5);
    const double f_contracted = f(contracted);
    if (f_contracted < std::min(f_reflected, f_worst)) {
      simplex[order[2]] = contracted;
      values[order[2]] = f_contracted;
      continue;
    }
    // shrink toward the best vertex
    for (int i : {order[1], order[2]}) {
      simplex[i] = lerp(best, simplex[i], 0.5);
      values[i] = f(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(best_it - values.begin());
  out.arg = simplex[idx];
  out.value = *best_it;
  return out;
}

}  // namespace wnl::opt

#endif  // WNL_OPTIMIZE_HPP
