#ifndef WNL_NORMS_HPP
#define WNL_NORMS_HPP

// Numerical s-, sup- and weighted norms of holomorphic maps on l_p^n.
//
// Every value reported here is a lower bound of the true supremum: it is the
// best point found by multi-start projected gradient ascent. The weighted
// norm is computed twice, once as an outer 1-D search over radii and once by
// direct ascent in the ball, and the two are compared.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <mutex>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wnl/constants.hpp"
#include "wnl/error.hpp"
#include "wnl/optimize.hpp"
#include "wnl/polynomial.hpp"
#include "wnl/space.hpp"

namespace wnl {

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 2000;
  double step_tol = 1e-10;
  double value_tol = 1e-8;
  std::uint64_t seed = 20240601;
  int s_grid = 257;
  /// Also start at every basis vector (four phases) and at the uniform vector.
  bool basis_starts = true;

  void validate() const {
    if (restarts < 1) throw Error(ErrorCode::OutOfDomain, "restarts must be >= 1");
    if (max_iters < 1) throw Error(ErrorCode::OutOfDomain, "max_iters must be >= 1");
    if (!(step_tol > 0.0) || !(value_tol > 0.0)) throw Error(ErrorCode::OutOfDomain, "tolerances must be positive");
    if (s_grid < 3) throw Error(ErrorCode::OutOfDomain, "s_grid must be >= 3");
  }
};

enum class NormMode { SNorm, SupNorm, VNorm };

inline std::string_view to_string(NormMode m) {
  switch (m) {
    case NormMode::SNorm: return "s";
    case NormMode::SupNorm: return "sup";
    case NormMode::VNorm: return "v";
  }
  return "?";
}

struct NormDiagnostics {
  int iterations = 0;
  int restarts_used = 0;
  std::vector<double> best_per_restart;
  bool converged = true;
  /// v-norm only: value of the direct ball ascent and the cross-check verdict.
  double direct_value = std::numeric_limits<double>::quiet_NaN();
  bool method_mismatch = false;
  /// v-norm only: the outer argmax sits on the right end of the search interval.
  bool endpoint_argmax = false;
  double s_max = std::numeric_limits<double>::quiet_NaN();
};

struct NormResult {
  double value;
  LpVector witness;
  double s_star;  ///< radius of the witness
  NormMode mode;
  double s;       ///< requested radius (SNorm / SupNorm)
  NormDiagnostics diagnostics;
};

namespace detail {

using Vec = std::vector<cplx>;

/// |F(x)| and its real gradient (complex form).
template <HolomorphicMap F>
class ModulusObjective {
 public:
  explicit ModulusObjective(const F& f) : f_(f), hol_(f.dim()) {}

  double operator()(std::span<const cplx> x, std::span<cplx> grad) const {
    const cplx v = f_.value_and_gradient(x, hol_);
    const double a = std::abs(v);
    if (a == 0.0) {
      // not differentiable; conj(grad F) still increases |F| to first order
      for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = std::conj(hol_[i]);
      return 0.0;
    }
    const cplx phase = v / a;
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = phase * std::conj(hol_[i]);
    return a;
  }

  double value(std::span<const cplx> x) const { return std::abs(f_.value(x)); }

 private:
  const F& f_;
  mutable Vec hol_;
};

/// (1 - ||x||^2) |F(x)| with the standard weight.
template <HolomorphicMap F>
class WeightedObjective {
 public:
  WeightedObjective(const F& f, double p) : modulus_(f), p_(p), ng_(f.dim()) {}

  double operator()(std::span<const cplx> x, std::span<cplx> grad) const {
    const double m = modulus_(x, grad);
    const double nx = norm(x, p_);
    const double w = 1.0 - nx * nx;
    norm_gradient(x, p_, ng_);
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = w * grad[i] - 2.0 * nx * m * ng_[i];
    return w * m;
  }

  double value(std::span<const cplx> x) const {
    const double nx = norm(x, p_);
    return (1.0 - nx * nx) * modulus_.value(x);
  }

 private:
  ModulusObjective<F> modulus_;
  double p_;
  mutable Vec ng_;
};

enum class Geometry { Sphere, Free };

struct AscentResult {
  Vec x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Projected gradient ascent with Barzilai-Borwein steps and a monotone
/// Armijo backtrack. On the sphere the gradient is projected on the tangent
/// space of {||x||_p = radius} and iterates are rescaled radially.
template <class Objective>
AscentResult ascend(const Objective& obj, Vec x, Geometry geom, double p, double radius,
                    const OptimizerConfig& cfg) {
  const std::size_t n = x.size();
  const bool sphere = geom == Geometry::Sphere;
  const bool smooth_norm = p > 1.0 && !std::isinf(p);
  const double scale = sphere ? radius : 1.0;

  Vec g(n), d(n), trial(n), gt(n), normal(n), prev_x(n), prev_d(n), diff(n);

  auto retract = [&](Vec& v) {
    if (!sphere) return;
    const double nv = norm(v, p);
    if (nv > 0.0)
      for (auto& z : v) z *= radius / nv;
  };
  auto tangent = [&](const Vec& at, const Vec& grad, Vec& out) {
    out = grad;
    if (!sphere || !smooth_norm) return;
    norm_gradient(at, p, normal);
    const double nn = real_dot(normal, normal);
    if (nn == 0.0) return;
    const double c = real_dot(grad, normal) / nn;
    for (std::size_t i = 0; i < n; ++i) out[i] -= c * normal[i];
  };

  AscentResult res;
  retract(x);
  double f = obj(x, g);
  tangent(x, g, d);
  double t = 0.0;
  int small_steps = 0;

  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    const double dn = std::sqrt(real_dot(d, d));
    if (!(dn > 0.0) || !std::isfinite(dn)) {
      res.converged = true;
      break;
    }
    const double max_t = 0.5 * scale / dn;
    if (it == 0) {
      t = 0.1 * scale / dn;
    } else {
      for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - prev_x[i];
      double sy = 0.0, ss = real_dot(diff, diff);
      for (std::size_t i = 0; i < n; ++i) {
        const cplx y = d[i] - prev_d[i];
        sy += diff[i].real() * y.real() + diff[i].imag() * y.imag();
      }
      t = sy < 0.0 ? ss / -sy : 2.0 * t;
    }
    t = std::min(t, max_t);

    bool accepted = false;
    double ft = f;
    for (int bt = 0; bt < 80; ++bt) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + t * d[i];
      retract(trial);
      ft = obj(trial, gt);
      for (std::size_t i = 0; i < n; ++i) diff[i] = trial[i] - x[i];
      const double gain = real_dot(diff, d);
      if (std::isfinite(ft) && ft > f && ft >= f + 1e-4 * gain) {
        accepted = true;
        break;
      }
      t *= 0.5;
      if (t * dn < 1e-3 * cfg.step_tol) break;
    }
    if (!accepted) {
      // no ascent left at working precision
      res.converged = true;
      break;
    }
    const double step = std::sqrt(real_dot(diff, diff));
    prev_x = x;
    prev_d = d;
    x.swap(trial);
    g.swap(gt);
    f = ft;
    tangent(x, g, d);
    if (step < cfg.step_tol * std::max(1.0, scale)) {
      if (++small_steps >= 2) {
        res.converged = true;
        ++it;
        break;
      }
    } else {
      small_steps = 0;
    }
  }
  res.x = std::move(x);
  res.value = f;
  res.iterations = it;
  return res;
}

inline Vec random_direction(std::mt19937_64& rng, std::size_t n, double p, double radius) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (auto& z : v) z = cplx{gauss(rng), gauss(rng)};
  const double nv = norm(v, p);
  for (auto& z : v) z *= radius / nv;
  return v;
}

/// Start points on the sphere of the given radius: caller-supplied warm
/// starts, then (optionally) basis vectors in four phases plus the uniform
/// vector, each nudged off exact symmetry, then seeded random directions.
inline std::vector<Vec> sphere_starts(std::size_t n, double p, double radius, const OptimizerConfig& cfg,
                                      std::span<const Vec> warm) {
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec> starts;
  auto rescale = [&](Vec v) {
    const double nv = norm(v, p);
    if (nv > 0.0)
      for (auto& z : v) z *= radius / nv;
    return v;
  };
  for (const auto& w : warm)
    if (w.size() == n && norm(w, p) > 0.0) starts.push_back(rescale(w));
  if (cfg.basis_starts) {
    const std::array<cplx, 4> phases{cplx{1, 0}, cplx{-1, 0}, cplx{0, 1}, cplx{0, -1}};
    auto nudge = [&](Vec v) {
      for (auto& z : v) z += 1e-4 * cplx{gauss(rng), gauss(rng)};
      return rescale(std::move(v));
    };
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& ph : phases) {
        Vec v(n);
        v[j] = ph;
        starts.push_back(nudge(std::move(v)));
      }
    }
    starts.push_back(nudge(Vec(n, cplx{1.0, 0.0})));
  }
  for (int r = 0; r < cfg.restarts; ++r) starts.push_back(random_direction(rng, n, p, radius));
  return starts;
}

struct MultiStart {
  AscentResult best;
  int best_index = -1;
  std::vector<double> values;
  std::vector<AscentResult> runs;  ///< filled only when requested
  int iterations = 0;
  bool any_converged = false;
};

/// Runs every start; ties (within 1e-13 relative) go to the lowest index.
template <class Objective>
MultiStart multistart(const Objective& obj, const std::vector<Vec>& starts, Geometry geom, double p, double radius,
                      const OptimizerConfig& cfg, bool keep_runs = false) {
  MultiStart out;
  out.values.reserve(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    AscentResult r = ascend(obj, starts[i], geom, p, radius, cfg);
    out.iterations += r.iterations;
    out.any_converged = out.any_converged || r.converged;
    out.values.push_back(r.value);
    const double tie = 1e-13 * std::max(1.0, std::abs(out.best.value));
    if (out.best_index < 0 || r.value > out.best.value + tie) {
      out.best = r;
      out.best_index = static_cast<int>(i);
    }
    if (keep_runs) out.runs.push_back(std::move(r));
  }
  return out;
}

inline double cached_s_of_N(int N) {
  static std::mutex mutex;
  static std::array<double, kMaxDegree + 1> cache{};
  if (N < 1 || N > kMaxDegree) return 1.0;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache[static_cast<std::size_t>(N)] == 0.0) cache[static_cast<std::size_t>(N)] = s_of_N(N);
  return cache[static_cast<std::size_t>(N)];
}

inline Vec normalized(const Vec& v, double p) {
  Vec out = v;
  const double nv = norm(v, p);
  if (nv > 0.0)
    for (auto& z : out) z /= nv;
  return out;
}

/// Distinct directions of the best runs, best first.
inline void merge_into_pool(std::vector<std::pair<double, Vec>>& pool, const MultiStart& ms, double p,
                            std::size_t per_anchor, std::size_t limit) {
  std::vector<std::size_t> order(ms.runs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ms.runs[a].value > ms.runs[b].value; });
  std::size_t taken = 0;
  for (std::size_t idx : order) {
    if (taken >= per_anchor || pool.size() >= limit) break;
    Vec dir = normalized(ms.runs[idx].x, p);
    bool duplicate = false;
    for (const auto& [v, other] : pool) {
      double d2 = 0.0;
      for (std::size_t i = 0; i < dir.size(); ++i) d2 += std::norm(dir[i] - other[i]);
      if (d2 < 1e-10) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    pool.emplace_back(ms.runs[idx].value, std::move(dir));
    ++taken;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generic entry points.

/// sup of |F| over the sphere of radius s (equivalently over the closed ball).
template <HolomorphicMap F>
NormResult s_norm(const F& f, const LpSpace& space, double s, const OptimizerConfig& cfg,
                  std::span<const std::vector<cplx>> warm = {}) {
  cfg.validate();
  if (!(s > 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfDomain, "s-norm radius must lie in (0, 1]");
  if (f.dim() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "map and space dimensions differ");
  const detail::ModulusObjective<F> obj(f);
  const auto starts = detail::sphere_starts(space.dim(), space.p(), s, cfg, warm);
  auto ms = detail::multistart(obj, starts, detail::Geometry::Sphere, space.p(), s, cfg);

  NormResult out{ms.best.value, LpVector(space, std::move(ms.best.x)), s, s == 1.0 ? NormMode::SupNorm : NormMode::SNorm,
                 s, {}};
  out.diagnostics.iterations = ms.iterations;
  out.diagnostics.restarts_used = static_cast<int>(starts.size());
  out.diagnostics.best_per_restart = std::move(ms.values);
  out.diagnostics.converged = ms.any_converged;
  return out;
}

template <HolomorphicMap F>
NormResult sup_norm(const F& f, const LpSpace& space, const OptimizerConfig& cfg,
                    std::span<const std::vector<cplx>> warm = {}) {
  auto r = s_norm(f, space, 1.0, cfg, warm);
  r.mode = NormMode::SupNorm;
  return r;
}

/// Weighted norm sup_{s in [0, s_max]} (1 - s^2) ||F||_s, with the direct ball
/// ascent as cross-check.
template <HolomorphicMap F>
NormResult v_norm_on(const F& f, const LpSpace& space, double s_max, const OptimizerConfig& cfg,
                     std::span<const std::vector<cplx>> warm = {}) {
  using detail::Vec;
  cfg.validate();
  if (!(s_max > 0.0 && s_max <= 1.0)) throw Error(ErrorCode::OutOfDomain, "s_max must lie in (0, 1]");
  if (f.dim() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "map and space dimensions differ");
  const double p = space.p();
  const std::size_t n = space.dim();
  const detail::ModulusObjective<F> modulus(f);

  NormDiagnostics diag;
  diag.s_max = s_max;

  // Pool of local-maximum directions gathered at a few anchor radii.
  std::vector<std::pair<double, Vec>> pool;
  constexpr int kAnchors = 6;
  constexpr std::size_t kPerAnchor = 8;
  constexpr std::size_t kPoolLimit = 32;
  for (int a = 1; a <= kAnchors; ++a) {
    const double r = s_max * a / kAnchors;
    OptimizerConfig anchor_cfg = cfg;
    anchor_cfg.seed = cfg.seed + static_cast<std::uint64_t>(a);
    const auto starts = detail::sphere_starts(n, p, r, anchor_cfg, warm);
    const auto ms = detail::multistart(modulus, starts, detail::Geometry::Sphere, p, r, anchor_cfg, true);
    diag.iterations += ms.iterations;
    diag.restarts_used += static_cast<int>(starts.size());
    diag.converged = diag.converged && ms.any_converged;
    detail::merge_into_pool(pool, ms, p, kPerAnchor, kPoolLimit);
  }

  const Vec origin(n);
  const double at_origin = modulus.value(origin);
  Vec carry;  // continuation from the previous radius

  auto best_on_sphere = [&](double s) -> std::pair<double, Vec> {
    if (s <= 0.0) return {at_origin, origin};
    std::pair<double, Vec> best{-1.0, {}};
    auto run = [&](const Vec& dir) {
      Vec x0 = dir;
      for (auto& z : x0) z *= s;
      auto r = detail::ascend(modulus, std::move(x0), detail::Geometry::Sphere, p, s, cfg);
      diag.iterations += r.iterations;
      if (r.value > best.first) best = {r.value, std::move(r.x)};
    };
    for (const auto& [v, dir] : pool) run(dir);
    if (!carry.empty()) run(detail::normalized(carry, p));
    carry = best.second;
    return best;
  };
  auto h = [&](double s) { return (1.0 - s * s) * best_on_sphere(s).first; };

  const auto outer = opt::grid_then_golden(h, 0.0, s_max, cfg.s_grid, 1e-10);
  double s_star = outer.arg;
  auto [modulus_at, witness] = best_on_sphere(s_star);
  if (s_star > 0.0) {
    // one fresh multi-start at the chosen radius
    std::vector<Vec> warm_here{witness};
    const auto starts = detail::sphere_starts(n, p, s_star, cfg, warm_here);
    const auto ms = detail::multistart(modulus, starts, detail::Geometry::Sphere, p, s_star, cfg);
    diag.iterations += ms.iterations;
    if (ms.best.value > modulus_at) {
      modulus_at = ms.best.value;
      witness = ms.best.x;
    }
  }
  double value_a = (1.0 - s_star * s_star) * modulus_at;
  if (witness.empty()) witness = origin;

  // Method (b): direct ascent of (1 - ||x||^2)|F(x)| in the open ball.
  const detail::WeightedObjective<F> weighted(f, p);
  std::vector<Vec> ball_starts;
  {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double r0 = s_star > 0.0 ? 0.9 * s_star + 0.05 * s_max : 0.05 * s_max;
    for (const auto& [v, dir] : pool) {
      Vec x0 = dir;
      for (auto& z : x0) z *= r0;
      ball_starts.push_back(std::move(x0));
    }
    for (int r = 0; r < cfg.restarts; ++r)
      ball_starts.push_back(detail::random_direction(rng, n, p, s_max * (0.05 + 0.9 * unif(rng))));
    ball_starts.push_back(origin);
  }
  const auto direct = detail::multistart(weighted, ball_starts, detail::Geometry::Free, p, 1.0, cfg);
  diag.iterations += direct.iterations;
  diag.restarts_used += static_cast<int>(ball_starts.size());
  diag.direct_value = direct.best.value;
  diag.method_mismatch = std::abs(value_a - direct.best.value) > 1e-6 * std::max(1.0, value_a);
  diag.endpoint_argmax = s_max < 1.0 && s_star >= s_max - 1e-9;
  diag.best_per_restart = direct.values;

  NormResult out{value_a, LpVector(space, std::move(witness)), s_star, NormMode::VNorm, s_max, std::move(diag)};
  return out;
}

template <HolomorphicMap F>
NormResult v_norm(const F& f, const LpSpace& space, int degree, const OptimizerConfig& cfg,
                  std::span<const std::vector<cplx>> warm = {}) {
  if (degree <= 0) {
    // constants: the weight is maximal at the origin
    const std::vector<cplx> origin(space.dim());
    NormResult out{std::abs(f.value(origin)), LpVector::zero(space), 0.0, NormMode::VNorm, 0.0, {}};
    out.diagnostics.direct_value = out.value;
    out.diagnostics.s_max = 0.0;
    return out;
  }
  return v_norm_on(f, space, detail::cached_s_of_N(degree), cfg, warm);
}

// ---------------------------------------------------------------------------
// Polynomial overloads.

inline NormResult s_norm(const Polynomial& P, double s, const OptimizerConfig& cfg = {}) {
  return s_norm(P, P.space(), s, cfg);
}

inline NormResult sup_norm(const Polynomial& P, const OptimizerConfig& cfg = {}) {
  return sup_norm(P, P.space(), cfg);
}

inline NormResult v_norm(const Polynomial& P, const OptimizerConfig& cfg = {},
                         std::span<const std::vector<cplx>> warm = {}) {
  return v_norm(P, P.space(), P.degree(), cfg, warm);
}

/// (1 - ||x||^2) |P(x)|
inline double weighted_value(const Polynomial& P, const LpVector& x) {
  const double nx = lp_norm(x);
  return (1.0 - nx * nx) * std::abs(P(x));
}

// ---------------------------------------------------------------------------
// Inequality checks.

struct LemmaReport {
  double s;
  double lhs;  ///< ||P||_s
  double rhs;  ///< (1 - sum (1-s^n) n^n/n!) ||P||_inf
  double sup_norm;
  bool holds;
};

/// ||P||_s >= (1 - sum_{n<=N} (1 - s^n) n^n/n!) ||P||_inf, slack 1e-8.
/// Degree-0 polynomials are checked as members of P^1.
inline LemmaReport check_lower_bound_lemma(const Polynomial& P, double s, const OptimizerConfig& cfg = {},
                                           const NormResult* sup_hint = nullptr) {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::OutOfDomain, "lemma check needs s in (0, 1)");
  const int N = std::max(1, P.degree());
  const double sup = sup_hint ? sup_hint->value : sup_norm(P, cfg).value;
  const double lhs = s_norm(P, s, cfg).value;
  const double rhs = lemma_coefficient(s, N) * sup;
  return {s, lhs, rhs, sup, lhs >= rhs - 1e-8};
}

struct EquivalenceReport {
  double alpha;
  double s_alpha;
  double s_alpha_norm;  ///< ||P||_{s(alpha,N)}
  double sup_norm;
  double v_norm;
  double rhs1;  ///< (1 - alpha) ||P||_inf
  double rhs2;  ///< (1 - s(alpha,N)^2)(1 - alpha) ||P||_inf
  bool first_holds;
  bool second_holds;
  bool holds() const { return first_holds && second_holds; }
};

inline EquivalenceReport check_equivalence(const Polynomial& P, double alpha, const OptimizerConfig& cfg = {},
                                           const NormResult* sup_hint = nullptr,
                                           const NormResult* v_hint = nullptr) {
  const int N = std::max(1, P.degree());
  const double sa = s_alpha_N(alpha, N);
  const double sup = sup_hint ? sup_hint->value : sup_norm(P, cfg).value;
  const double v = v_hint ? v_hint->value : v_norm(P, cfg).value;
  const double sn = s_norm(P, sa, cfg).value;
  EquivalenceReport r{alpha, sa, sn, sup, v, (1.0 - alpha) * sup, (1.0 - sa * sa) * (1.0 - alpha) * sup, false, false};
  r.first_holds = r.s_alpha_norm >= r.rhs1 - 1e-8;
  r.second_holds = r.v_norm >= r.rhs2 - 1e-8;
  return r;
}

struct AttainmentWitness {
  double s_star;
  LpVector point;
  double margin;  ///< best known v-norm minus the weighted value at the point
};

/// The point realizing a computed v-norm. The margin is measured against the
/// larger of the two independent v-norm estimates.
inline AttainmentWitness attainment_witness(const Polynomial& P, const NormResult& v) {
  if (v.mode != NormMode::VNorm) throw Error(ErrorCode::OutOfDomain, "attainment witness needs a v-norm result");
  double reference = v.value;
  if (std::isfinite(v.diagnostics.direct_value)) reference = std::max(reference, v.diagnostics.direct_value);
  return {v.s_star, v.witness, reference - weighted_value(P, v.witness)};
}

}  // namespace wnl

#endif  // WNL_NORMS_HPP
