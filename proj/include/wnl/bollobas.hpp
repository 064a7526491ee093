#ifndef WNL_BOLLOBAS_HPP
#define WNL_BOLLOBAS_HPP

// Constructive near-attainment correction: given P with ||P||_v = 1 and a
// point x where P almost attains its weighted norm, build Q close to P in sup
// norm and y close to span(x) with Q attaining its weighted norm at y.
//
// P_{n+1} = P_n o T_{rho_n, x_n}, x_{n+1} a near-maximizer of P_{n+1}. Every
// guarantee is checked on the output; nothing is taken on trust.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wnl/constants.hpp"
#include "wnl/error.hpp"
#include "wnl/norms.hpp"
#include "wnl/optimize.hpp"
#include "wnl/polynomial.hpp"
#include "wnl/space.hpp"

namespace wnl {

// ---------------------------------------------------------------------------
// Schedule

enum class ScheduleMode { Faithful, Practical };

inline std::string_view to_string(ScheduleMode m) { return m == ScheduleMode::Faithful ? "faithful" : "practical"; }

class Schedule {
 public:
  using MuFunction = std::function<double(double)>;

  /// rho_1 = eps/(2M), rho_n = mu(rho_1)/(2^n M). Both summability bounds are
  /// checked on construction.
  Schedule(double eps, ScheduleMode mode, double M, MuFunction mu, int max_iters = 60)
      : eps_(eps), mode_(mode), M_(M), mu_(std::move(mu)), max_iters_(max_iters) {
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::OutOfDomain, "eps must lie in (0, 1)");
    if (!(M > 0.0) || !std::isfinite(M)) throw Error(ErrorCode::OutOfDomain, "schedule constant M must be positive");
    if (max_iters < 1) throw Error(ErrorCode::OutOfDomain, "max_iters must be >= 1");
    rho1_ = eps / (2.0 * M);
    mu_rho1_ = mu_(rho1_);
    // M sum_{n>=1} rho_n = eps/2 + mu(rho_1)/2 and M sum_{n>=2} rho_n = mu(rho_1)/2,
    // summed here term by term plus the geometric tail.
    double tail = 0.0;
    for (int n = max_iters_; n >= 2; --n) tail += rho(n);
    tail += mu_rho1_ / (std::ldexp(1.0, max_iters_) * M_);
    total_ = M_ * (rho1_ + tail);
    tail_ = M_ * tail;
    if (!(total_ <= eps_ * (1.0 + 1e-12)) || !(tail_ <= mu_rho1_ * (1.0 + 1e-12)))
      throw Error(ErrorCode::HypothesisViolated, "schedule does not satisfy its summability bounds");
  }

  static Schedule faithful(double eps, int N, const LpSpace& space, int max_iters = 60) {
    space.require_uniformly_convex("faithful schedule");
    const LpSpace X = space;
    return Schedule(eps, ScheduleMode::Faithful, M_N(N), [X](double r) { return wnl::mu(r, X); }, max_iters);
  }

  /// mu replaced by max(mu(rho), kappa rho^2) and M_N by a measured constant.
  static Schedule practical(double eps, double M, const LpSpace& space, double kappa = 1e-3, int max_iters = 60) {
    space.require_uniformly_convex("practical schedule");
    const LpSpace X = space;
    return Schedule(eps, ScheduleMode::Practical, M,
                    [X, kappa](double r) { return std::max(wnl::mu(r, X), kappa * r * r); }, max_iters);
  }

  double eps() const noexcept { return eps_; }
  ScheduleMode mode() const noexcept { return mode_; }
  double M() const noexcept { return M_; }
  int max_iters() const noexcept { return max_iters_; }
  double mu(double rho) const { return mu_(rho); }
  /// eta(eps) = mu(rho_1), the admissible near-attainment defect of the input.
  double eta() const noexcept { return mu_rho1_; }
  double M_times_sum() const noexcept { return total_; }
  double M_times_tail() const noexcept { return tail_; }

  /// n >= 1
  double rho(int n) const {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "schedule index starts at 1");
    if (n == 1) return rho1_;
    return mu_rho1_ / (std::ldexp(1.0, n) * M_);
  }

 private:
  double eps_;
  ScheduleMode mode_;
  double M_;
  MuFunction mu_;
  int max_iters_;
  double rho1_ = 0.0;
  double mu_rho1_ = 0.0;
  double total_ = 0.0;
  double tail_ = 0.0;
};

/// Sampled sup over the unit sphere of the dual norm of the gradient: the
/// Lipschitz constant of P on the ball.
inline double lipschitz_estimate(const Polynomial& P, std::uint64_t seed, int samples = 1024) {
  const std::size_t n = P.dim();
  const double p = P.space().p();
  const double q = P.space().dual_exponent();
  std::vector<cplx> grad(n);
  double best = 0.0;
  auto visit = [&](const std::vector<cplx>& x) {
    P.value_and_gradient(x, grad);
    best = std::max(best, norm(grad, q));
  };
  std::mt19937_64 rng(seed);
  for (std::size_t j = 0; j < n; ++j) {
    for (cplx ph : {cplx{1, 0}, cplx{-1, 0}, cplx{0, 1}, cplx{0, -1}}) {
      std::vector<cplx> x(n);
      x[j] = ph;
      visit(x);
    }
  }
  for (int s = 0; s < samples; ++s) visit(detail::random_direction(rng, n, p, 1.0));
  return best;
}

/// M = 4 Lip(P) / ||P||_v, the measured counterpart of M_N.
inline double practical_M(const Polynomial& P, double v_norm_value, std::uint64_t seed) {
  if (!(v_norm_value > 0.0)) throw Error(ErrorCode::ZeroPolynomial, "practical M needs a nonzero polynomial");
  return std::max(4.0 * lipschitz_estimate(P, seed) / v_norm_value, 1.0);
}

// ---------------------------------------------------------------------------
// Normalization

struct NormalizedPolynomial {
  Polynomial P;
  double factor;   ///< P = factor * input
  NormResult v;    ///< v-norm of the input
};

inline NormalizedPolynomial normalize_v(const Polynomial& P, const OptimizerConfig& cfg = {}) {
  auto v = v_norm(P, cfg);
  if (!(v.value > 0.0)) throw Error(ErrorCode::ZeroPolynomial, "cannot normalize a polynomial with zero v-norm");
  const double factor = 1.0 / v.value;
  return {P.scaled(factor), factor, std::move(v)};
}

// ---------------------------------------------------------------------------
// Tubes around complex lines

/// d(y, span x); the span of 0 is {0}.
inline SpanProjection tube_projection(std::span<const cplx> y, std::span<const cplx> x, double p) {
  if (std::all_of(x.begin(), x.end(), [](cplx z) { return z == cplx{}; })) return {cplx{}, norm(y, p), true};
  return detail::span_projection(y, x, p);
}

namespace detail {

/// (1 - ||y||^2)|S(y)| - w * max(0, rho - d(y, span x))^2. The gradient of the
/// distance is the norm gradient at the optimal residual.
template <HolomorphicMap F>
class TubePenaltyObjective {
 public:
  TubePenaltyObjective(const F& f, std::vector<cplx> x, double p, double rho, double weight)
      : weighted_(f, p), x_(std::move(x)), p_(p), rho_(rho), weight_(weight), r_(x_.size()), ng_(x_.size()) {}

  double operator()(std::span<const cplx> y, std::span<cplx> grad) const {
    double h = weighted_(y, grad);
    const auto proj = tube_projection(y, x_, p_);
    const double viol = rho_ - proj.distance;
    if (viol > 0.0) {
      for (std::size_t i = 0; i < y.size(); ++i) r_[i] = y[i] - proj.lambda * x_[i];
      norm_gradient(r_, p_, ng_);
      h -= weight_ * viol * viol;
      for (std::size_t i = 0; i < y.size(); ++i) grad[i] += 2.0 * weight_ * viol * ng_[i];
    }
    return h;
  }

 private:
  WeightedObjective<F> weighted_;
  std::vector<cplx> x_;
  double p_;
  double rho_;
  double weight_;
  mutable std::vector<cplx> r_;
  mutable std::vector<cplx> ng_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Localization

struct LocalizationOptions {
  /// Defaults to mu(rho) of the space.
  std::optional<double> mu;
  /// Reuse a v-norm already computed for S.
  const NormResult* v_hint = nullptr;
  /// Constant in the hypothesis rho < 1/(16 M); defaults to M_N(deg S).
  std::optional<double> M;
  /// Throw HypothesisViolated when the lemma's hypotheses fail (faithful use).
  bool enforce_hypotheses = true;
};

struct LocalizationResult {
  bool holds;
  double lhs;  ///< sup of (1-||y||^2)|S(y)| over the ball outside the tube
  double rhs;  ///< ||S||_v - mu
  double v_norm;
  double mu;
  double rho;
  bool hypotheses_met;
  std::optional<LpVector> witness;  ///< feasible point realizing lhs
  double witness_distance = std::numeric_limits<double>::quiet_NaN();
};

/// Penalty method: the weight starts at 1/rho^2 and grows x10 over five
/// rounds; the final iterates are pushed radially onto the tube boundary so
/// every reported value is feasible.
inline LocalizationResult localization_check(const Polynomial& S, const LpVector& x, double rho,
                                             const OptimizerConfig& cfg = {}, const LocalizationOptions& opt = {}) {
  S.check_space(x);
  const LpSpace& X = S.space();
  const double p = X.p();
  const std::size_t n = X.dim();
  if (!(rho >= 0.0 && rho <= 1.0)) throw Error(ErrorCode::OutOfDomain, "rho must lie in [0, 1]");

  NormResult v = opt.v_hint ? *opt.v_hint : v_norm(S, cfg);
  const double mu_val = opt.mu ? *opt.mu : wnl::mu(rho, X);
  const double M = opt.M ? *opt.M : M_N(std::max(1, S.degree()));
  const bool hyp = v.value >= 0.5 && v.value <= 2.0 && rho > 0.0 && rho < 1.0 / (16.0 * M);
  if (opt.enforce_hypotheses && !hyp)
    throw Error(ErrorCode::HypothesisViolated, "localization needs 1/2 <= ||S||_v <= 2 and 0 < rho < 1/(16 M)");

  LocalizationResult out{false, v.value, v.value - mu_val, v.value, mu_val, rho, hyp, std::nullopt};
  if (rho == 0.0) return out;

  std::vector<std::vector<cplx>> starts;
  {
    std::mt19937_64 rng(cfg.seed ^ 0x5bd1e995ULL);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto& w = v.witness.data();
    // around the v-norm witness, just outside the tube
    for (std::size_t j = 0; j < n; ++j) {
      for (cplx ph : {cplx{1, 0}, cplx{-1, 0}, cplx{0, 1}, cplx{0, -1}}) {
        std::vector<cplx> y = w;
        y[j] += 2.0 * rho * ph;
        starts.push_back(std::move(y));
      }
    }
    for (int r = 0; r < cfg.restarts; ++r) {
      auto dir = detail::random_direction(rng, n, p, 1.0);
      std::vector<cplx> y = w;
      for (std::size_t i = 0; i < n; ++i) y[i] += 2.0 * rho * dir[i];
      starts.push_back(std::move(y));
      starts.push_back(detail::random_direction(rng, n, p, 0.05 + 0.9 * unif(rng)));
    }
  }

  double weight = 1.0 / (rho * rho);
  for (int round = 0; round < 5; ++round, weight *= 10.0) {
    const detail::TubePenaltyObjective<Polynomial> obj(S, x.data(), p, rho, weight);
    for (auto& y : starts) y = detail::ascend(obj, std::move(y), detail::Geometry::Free, p, 1.0, cfg).x;
  }

  double best = -std::numeric_limits<double>::infinity();
  for (auto& y : starts) {
    const auto proj = tube_projection(y, x.data(), p);
    if (proj.distance < rho) {
      if (proj.distance == 0.0) continue;
      const double t = rho / proj.distance;
      for (std::size_t i = 0; i < n; ++i) y[i] = proj.lambda * x[i] + t * (y[i] - proj.lambda * x[i]);
    }
    const double ny = norm(y, p);
    if (!(ny < 1.0)) continue;
    const double val = (1.0 - ny * ny) * std::abs(S.value(y));
    if (val > best) {
      best = val;
      out.witness = LpVector(X, y);
      out.witness_distance = tube_projection(y, x.data(), p).distance;
    }
  }
  out.lhs = std::isfinite(best) ? best : 0.0;
  out.holds = out.lhs < out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// The iteration

struct BollobasOptions {
  int max_iters = 60;
  /// Stop once rho_n drops to this level. Below about 1e-8 the location of a
  /// maximizer is no longer resolved in double precision.
  double rho_tol = 1e-8;
  /// Accepted attainment margin of Q at y.
  double attainment_tol = 1e-6;
  /// Random points per iteration for the contraction inequality of T.
  int contraction_samples = 64;
  /// Overrides the measured M of the practical schedule.
  std::optional<double> practical_M;
  double kappa = 1e-3;
};

struct BollobasStep {
  int n;
  double rho;
  LpVector x;             ///< x_n
  double v_norm;          ///< ||P_n||_v
  double margin;          ///< ||P_n||_v - (1-||x_n||^2)|P_n(x_n)|
  double required_slack;  ///< max(mu(rho_n), 1e-9)
  LocalizationResult localization;  ///< S = P_{n+1}, around x_n with rho_n
  LpVector x_next;
  double v_next;
  double margin_next;
  double dist_next;       ///< d(x_{n+1}, span x_n)
  double drift;           ///< ||P_n - P_{n+1}||_inf
  double drift_bound;     ///< rho_n ||P_n||_v M / 2
  double telescoping;     ///< ||P - P_{n+1}||_inf
  double telescoping_bound;  ///< M sum_{i<=n} rho_i
  double contraction_excess;  ///< max of ||T y|| - ||y||(1 - delta(2 rho ||y - P_x y||)) over samples
  int retries;
};

struct BollobasResult {
  Polynomial Q;
  LpVector y;
  std::vector<BollobasStep> steps;
  ScheduleMode mode;
  double eps;
  double M;
  double eta;
  double input_v_norm;
  double input_margin;
  double sup_distance;      ///< ||P - Q||_inf
  double span_distance;     ///< d(y, span x)
  double attainment_margin; ///< independent ||Q||_v estimate minus (1-||y||^2)|Q(y)|
  double final_v_norm;
  bool sup_ok = false;
  bool span_ok = false;
  bool attainment_ok = false;
  bool guarantees_hold() const { return sup_ok && span_ok && attainment_ok; }
};

/// Carries the partial or complete result of a failed run.
class BollobasError : public Error {
 public:
  BollobasError(ErrorCode code, const std::string& what, BollobasResult result)
      : Error(code, what), result_(std::move(result)) {}
  const BollobasResult& result() const noexcept { return result_; }

 private:
  BollobasResult result_;
};

namespace detail {

inline RankOneUpdateOperator contraction_operator(double rho, const LpVector& x) {
  if (lp_norm(x) == 0.0) return RankOneUpdateOperator(1.0 - rho, 0.0, std::vector<cplx>(x.size()), std::vector<cplx>(x.size()));
  return make_T(rho, x);
}

inline double weighted_modulus(const Polynomial& P, std::span<const cplx> y) {
  const double ny = norm(y, P.space().p());
  return (1.0 - ny * ny) * std::abs(P.value(y));
}

inline double best_estimate(const NormResult& v) {
  return std::isfinite(v.diagnostics.direct_value) ? std::max(v.value, v.diagnostics.direct_value) : v.value;
}

/// Largest excess of ||T y|| over ||y|| - ||y|| delta(2 rho ||y - P_x y||) on random y in the ball.
inline double contraction_excess(const RankOneUpdateOperator& T, const LpVector& x, double rho, int samples,
                                 std::uint64_t seed) {
  const LpSpace& X = x.space();
  if (samples <= 0 || lp_norm(x) == 0.0) return -std::numeric_limits<double>::infinity();
  const auto Px = make_projection(x);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = -std::numeric_limits<double>::infinity();
  std::vector<cplx> ty(X.dim()), py(X.dim()), diff(X.dim());
  for (int s = 0; s < samples; ++s) {
    const auto y = random_direction(rng, X.dim(), X.p(), unif(rng));
    T.apply(y, ty);
    Px.apply(y, py);
    for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - py[i];
    const double ny = norm(y, X.p());
    const double t = std::min(2.0, 2.0 * rho * norm(diff, X.p()));
    const double bound = ny - ny * modulus_of_convexity(X, t);
    worst = std::max(worst, norm(ty, X.p()) - bound);
  }
  return worst;
}

}  // namespace detail

/// Runs the correction. In Faithful mode the schedule uses M_N and mu; in
/// Practical mode a measured M and max(mu, kappa rho^2).
inline BollobasResult bollobas_correct(const Polynomial& P, const LpVector& x, double eps, ScheduleMode mode,
                                       const OptimizerConfig& cfg = {}, const BollobasOptions& opt = {}) {
  const LpSpace& X = P.space();
  X.require_uniformly_convex("bollobas_correct");
  P.check_space(x);
  const int N = std::max(1, P.degree());
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::OutOfDomain, "eps must lie in (0, 1)");
  if (mode == ScheduleMode::Faithful && !(eps < 1.0 / 16.0))
    throw Error(ErrorCode::HypothesisViolated, "faithful mode needs eps < 1/16");
  if (!(lp_norm(x) < 1.0)) throw Error(ErrorCode::HypothesisViolated, "x must lie in the open unit ball");

  const NormResult v0 = v_norm(P, cfg, std::vector<std::vector<cplx>>{x.data()});
  const double v0_value = detail::best_estimate(v0);
  if (std::abs(v0_value - 1.0) > 1e-6) throw Error(ErrorCode::HypothesisViolated, "input must satisfy ||P||_v = 1");

  const double M = mode == ScheduleMode::Faithful ? M_N(N)
                                                  : (opt.practical_M ? *opt.practical_M : practical_M(P, v0_value, cfg.seed));
  const Schedule sched = mode == ScheduleMode::Faithful ? Schedule::faithful(eps, N, X, opt.max_iters)
                                                        : Schedule::practical(eps, M, X, opt.kappa, opt.max_iters);
  const double input_margin = v0_value - weighted_value(P, x);
  if (input_margin > sched.eta() + 1e-9)
    throw Error(ErrorCode::HypothesisViolated, "x is not a near-maximizer: margin " + std::to_string(input_margin) +
                                                   " exceeds eta " + std::to_string(sched.eta()));

  BollobasResult res{P, x, {}, mode, eps, M, sched.eta(), v0_value, input_margin, 0, 0, 0, v0_value};

  Polynomial Pn = P;
  LpVector xn = x;
  double vn = v0_value;
  double margin_n = input_margin;
  double rho_sum = 0.0;

  for (int n = 1; n <= sched.max_iters(); ++n) {
    const double rho = sched.rho(n);
    if (rho <= opt.rho_tol) break;
    rho_sum += rho;
    const double rho_next = n < sched.max_iters() ? sched.rho(n + 1) : 0.0;
    const double required = std::max(sched.mu(rho_next), 1e-9);

    const auto T = detail::contraction_operator(rho, xn);
    Polynomial Pnext = precompose(Pn, T);

    int retries = 0;
    OptimizerConfig step_cfg = cfg;
    step_cfg.seed = cfg.seed + static_cast<std::uint64_t>(n);
    NormResult vnext = v_norm(Pnext, step_cfg, std::vector<std::vector<cplx>>{xn.data()});
    double margin_next = detail::best_estimate(vnext) - weighted_value(Pnext, vnext.witness);
    if (margin_next > required) {
      ++retries;
      step_cfg.restarts *= 4;
      vnext = v_norm(Pnext, step_cfg, std::vector<std::vector<cplx>>{xn.data()});
      margin_next = detail::best_estimate(vnext) - weighted_value(Pnext, vnext.witness);
    }

    LocalizationOptions lo;
    lo.mu = sched.mu(rho);
    lo.v_hint = &vnext;
    lo.M = M;
    lo.enforce_hypotheses = false;
    auto loc = localization_check(Pnext, xn, rho, step_cfg, lo);

    const double dist_next = tube_projection(vnext.witness.coords(), xn.coords(), X.p()).distance;
    const double drift = sup_norm(Difference<Polynomial, Polynomial>(Pn, Pnext), X, step_cfg).value;
    const double tele = sup_norm(Difference<Polynomial, Polynomial>(P, Pnext), X, step_cfg).value;
    const double excess = detail::contraction_excess(T, xn, rho, opt.contraction_samples, step_cfg.seed);

    res.steps.push_back(BollobasStep{n, rho, xn, vn, margin_n, std::max(sched.mu(rho), 1e-9), std::move(loc),
                                     vnext.witness, detail::best_estimate(vnext), margin_next, dist_next, drift,
                                     rho * vn * M / 2.0, tele, M * rho_sum, excess, retries});

    Pn = std::move(Pnext);
    xn = vnext.witness;
    vn = detail::best_estimate(vnext);
    margin_n = margin_next;
    if (margin_next > required) {
      res.Q = Pn;
      res.y = xn;
      throw BollobasError(ErrorCode::NoConvergence,
                          "near-maximizer of P_" + std::to_string(n + 1) + " missed its slack after a retry", res);
    }
  }

  res.Q = Pn;
  res.y = xn;
  res.sup_distance = sup_norm(Difference<Polynomial, Polynomial>(P, Pn), X, cfg).value;
  res.span_distance = tube_projection(xn.coords(), x.coords(), X.p()).distance;
  {
    OptimizerConfig check_cfg = cfg;
    check_cfg.seed = cfg.seed ^ 0xa5a5a5a5ULL;
    const NormResult vq = v_norm(Pn, check_cfg, std::vector<std::vector<cplx>>{xn.data()});
    res.final_v_norm = std::max(detail::best_estimate(vq), vn);
    res.attainment_margin = res.final_v_norm - weighted_value(Pn, xn);
  }
  res.sup_ok = res.sup_distance <= eps;
  res.span_ok = res.span_distance <= eps;
  res.attainment_ok = res.attainment_margin <= opt.attainment_tol;
  if (!res.guarantees_hold()) throw BollobasError(ErrorCode::GuaranteeFailed, "a-posteriori guarantee failed", res);
  return res;
}

// ---------------------------------------------------------------------------
// Convergence monitor

struct CauchyMonitorReport {
  enum class Status { Ok, Violated, ConvergedToZero, InsufficientIterations };
  Status status;
  double r;                         ///< min ||x_n|| over the kept points
  std::vector<double> increments;   ///< ||k_{n+1} - k_n|| after phase alignment
  std::vector<double> bounds;       ///< (2/r) rho_n + 1e-8
  bool ok() const { return status != Status::Violated; }
};

inline std::string_view to_string(CauchyMonitorReport::Status s) {
  switch (s) {
    case CauchyMonitorReport::Status::Ok: return "ok";
    case CauchyMonitorReport::Status::Violated: return "violated";
    case CauchyMonitorReport::Status::ConvergedToZero: return "converged_to_zero";
    case CauchyMonitorReport::Status::InsufficientIterations: return "insufficient_iterations";
  }
  return "?";
}

/// Normalized directions k_n = x_n/||x_n||, each aligned to its predecessor by
/// the best unit scalar, against ||k_{n+1} - k_n|| <= (2/r) rho_n + 1e-8.
/// Needs at least three points x_1, ..., x_{m+1}.
inline CauchyMonitorReport cauchy_monitor(const BollobasResult& run, bool strict = false) {
  using Status = CauchyMonitorReport::Status;
  CauchyMonitorReport rep{Status::Ok, 0.0, {}, {}};
  std::vector<LpVector> xs;
  std::vector<double> rhos;
  for (const auto& st : run.steps) {
    xs.push_back(st.x);
    rhos.push_back(st.rho);
  }
  if (!run.steps.empty()) xs.push_back(run.steps.back().x_next);
  if (xs.size() < 3) {
    rep.status = Status::InsufficientIterations;
    return rep;
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (lp_norm(xs[i]) >= 1e-8) kept.push_back(i);
  if (kept.empty()) {
    rep.status = Status::ConvergedToZero;
    return rep;
  }
  rep.r = std::numeric_limits<double>::infinity();
  for (auto i : kept) rep.r = std::min(rep.r, lp_norm(xs[i]));

  const double p = xs.front().space().p();
  std::vector<cplx> prev;
  for (std::size_t idx = 0; idx < kept.size(); ++idx) {
    const auto& xi = xs[kept[idx]];
    std::vector<cplx> k = xi.data();
    const double nk = lp_norm(xi);
    for (auto& z : k) z /= nk;
    if (!prev.empty()) {
      std::vector<cplx> d(k.size());
      auto dist = [&](double theta) {
        const cplx ph = std::polar(1.0, theta);
        for (std::size_t i = 0; i < k.size(); ++i) d[i] = ph * k[i] - prev[i];
        return -norm(d, p);
      };
      const auto best = opt::grid_then_golden(dist, -std::numbers::pi, std::numbers::pi, 361, 1e-12);
      const cplx ph = std::polar(1.0, best.arg);
      for (auto& z : k) z *= ph;
      // the step from kept[idx-1] to kept[idx] spans the rhos in between
      double rho_span = 0.0;
      for (std::size_t j = kept[idx - 1]; j < kept[idx]; ++j) rho_span += rhos[j];
      const double inc = -best.value;
      const double bound = 2.0 / rep.r * rho_span + 1e-8;
      rep.increments.push_back(inc);
      rep.bounds.push_back(bound);
      if (inc > bound) rep.status = Status::Violated;
    }
    prev = std::move(k);
  }
  if (strict && rep.status == Status::Violated)
    throw Error(ErrorCode::MonitorViolation, "normalized iterates moved more than (2/r) rho_n");
  return rep;
}

}  // namespace wnl

#endif  // WNL_BOLLOBAS_HPP
