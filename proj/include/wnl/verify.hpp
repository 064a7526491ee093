#ifndef WNL_VERIFY_HPP
#define WNL_VERIFY_HPP

// The property suite behind `wnl verify`: every invariant of every module,
// seeded, with a deterministic plain-text report (no timings).

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wnl/bollobas.hpp"
#include "wnl/constants.hpp"
#include "wnl/counterexamples.hpp"
#include "wnl/norms.hpp"
#include "wnl/polynomial.hpp"
#include "wnl/sampling.hpp"
#include "wnl/space.hpp"

namespace wnl::verify {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Property {
  std::string name;
  std::function<Outcome(std::uint64_t seed)> check;
};

struct PropertyResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed;
  std::vector<PropertyResult> results;
  int passed() const {
    int k = 0;
    for (const auto& r : results) k += r.passed ? 1 : 0;
    return k;
  }
  int failed() const { return static_cast<int>(results.size()) - passed(); }
  bool ok() const { return failed() == 0; }

  std::string text() const {
    std::string out = "wnl verify seed=" + std::to_string(seed) + "\n";
    for (const auto& r : results) out += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.name + ": " + r.detail + "\n";
    out += std::to_string(passed()) + " passed, " + std::to_string(failed()) + " failed\n";
    return out;
  }
};

namespace detail {

inline std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

inline OptimizerConfig suite_config(std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.seed = seed;
  return cfg;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// --- space -----------------------------------------------------------------

inline Outcome norm_axioms(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  bool zero_ok = true;
  for (double p : {1.0, 1.5, 2.0, 3.0, kInfinity}) {
    const LpSpace X(5, p);
    zero_ok = zero_ok && lp_norm(LpVector::zero(X)) == 0.0;
    for (int t = 0; t < 100; ++t) {
      const LpVector v = random_point(X, rng, 3.0);
      const cplx a = random_complex(rng, 2.0);
      const double nv = lp_norm(v);
      if (nv == 0.0) zero_ok = false;
      worst = std::max(worst, std::abs(lp_norm(v.scaled(a)) - std::abs(a) * nv) / std::max(1e-300, std::abs(a) * nv));
    }
  }
  return {zero_ok && worst <= 1e-12, format("max homogeneity rel err %.3e", worst)};
}

inline Outcome duality_holder(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst_holder = -1.0, worst_norming = 0.0;
  for (double p : {1.0, 1.5, 2.0, 4.0, kInfinity}) {
    const LpSpace X(4, p);
    for (int t = 0; t < 10; ++t) {
      const LpVector x = random_point(X, rng, 2.0);
      const Functional f = duality_functional(x);
      worst_norming = std::max(worst_norming, std::abs(f(x) - lp_norm(x)) / lp_norm(x));
      for (int k = 0; k < 100; ++k) {
        const LpVector y = random_point(X, rng, 2.0);
        worst_holder = std::max(worst_holder, (std::abs(f(y)) - lp_norm(y)) / std::max(1e-300, lp_norm(y)));
      }
    }
  }
  return {worst_holder <= 1e-10 && worst_norming <= 1e-10,
          format("max |f(y)|/|y|-1 %.3e, max |f(x)-|x||/|x| %.3e", worst_holder, worst_norming)};
}

inline Outcome distance_bounds(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double excess = -1.0, on_span = 0.0;
  for (double p : {1.5, 2.0, 3.0}) {
    const LpSpace X(4, p);
    for (int t = 0; t < 25; ++t) {
      const LpVector x = random_unit(X, rng);
      const LpVector y = random_point(X, rng, 2.0);
      excess = std::max(excess, dist_to_span(y, x) - lp_norm(y));
      on_span = std::max(on_span, dist_to_span(x.scaled(random_complex(rng)), x));
    }
  }
  return {excess <= 1e-12 && on_span <= 1e-10,
          format("max d(y,x)-|y| %.3e, max d(lx,x) %.3e", excess, on_span)};
}

/// delta(t) <= 1 - ||(x+y)/2|| for every pair in the ball with ||x-y|| >= t,
/// checked at t = ||x-y|| by monotonicity.
inline Outcome modulus_lower_bound(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = -1.0;
  bool monotone = true;
  for (double p : {1.25, 1.5, 2.0, 3.0, 4.0}) {
    const LpSpace X(2, p);
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double d = modulus_of_convexity(X, 2.0 * i / 200.0);
      if (d < prev) monotone = false;
      prev = d;
    }
    for (int t = 0; t < 2000; ++t) {
      LpVector x = random_unit(X, rng);
      LpVector y = random_unit(X, rng);
      if (t % 2 == 1) {
        x = x.scaled(std::sqrt(unif(rng)));
        y = y.scaled(std::sqrt(unif(rng)));
      }
      const double dist = std::min(2.0, lp_norm(x - y));
      const double gap = 1.0 - lp_norm((x + y).scaled(0.5));
      worst = std::max(worst, modulus_of_convexity(X, dist) - gap);
    }
  }
  return {monotone && worst <= 1e-8, format("monotone %d, max delta(t) - empirical gap %.3e", monotone ? 1 : 0, worst)};
}

inline Outcome weight_profile(std::uint64_t) {
  const Weight w = standard_weight();
  bool strict = true;
  double prev = weight_eval(w, 0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double cur = weight_eval(w, i / 1000.0);
    if (!(cur < prev)) strict = false;
    prev = cur;
  }
  const bool ends = weight_eval(w, 0.0) == 1.0 && weight_eval(w, 1.0) == 0.0;
  return {strict && ends, format("strictly decreasing %d, endpoints exact %d", strict ? 1 : 0, ends ? 1 : 0)};
}

// --- polynomial ------------------------------------------------------------

inline Outcome component_homogeneity(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LpSpace X(4, 2.0);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int k = 1 + t % 4;
    const auto P = random_diagonal(X, k, seed + t, true);
    const Functional f(X, {random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)});
    const Polynomial F(X, {HomogeneousComponent::functional_power(k, f)});
    const LpVector x = random_point(X, rng);
    const cplx lam = random_complex(rng);
    const cplx factor = ipow(lam, k);
    for (const Polynomial* Q : {&P, &F}) {
      const cplx lhs = (*Q)(x.scaled(lam));
      const cplx rhs = factor * (*Q)(x);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  return {worst <= 1e-10, format("max rel err %.3e", worst)};
}

inline Outcome precompose_structure(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LpSpace X(4, 3.0);
  double worst = 0.0;
  bool degree_ok = true;
  for (int t = 0; t < 20; ++t) {
    const int N = 1 + t % 4;
    const auto P = random_diagonal(X, N, seed + 100 + t);
    const auto T = make_T(0.3, random_point(X, rng).scaled(2.0));
    const auto PT = precompose(P, T);
    degree_ok = degree_ok && PT.degree() == P.degree();
    const LpVector y = random_point(X, rng);
    worst = std::max(worst, std::abs(PT(y) - P(T(y))) / std::max(1.0, std::abs(P(T(y)))));
  }
  return {degree_ok && worst <= 1e-12, format("degree preserved %d, max eval mismatch %.3e", degree_ok ? 1 : 0, worst)};
}

inline Outcome projection_properties(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double idem = 0.0, contraction = -1.0, fixed = 0.0;
  for (double p : {1.5, 2.0, 4.0}) {
    const LpSpace X(4, p);
    for (int t = 0; t < 50; ++t) {
      const LpVector x = random_point(X, rng);
      const auto Px = make_projection(x);
      const auto T = make_T(0.4, x);
      const LpVector y = random_point(X, rng, 2.0);
      idem = std::max(idem, lp_norm(Px(Px(y)) - Px(y)));
      contraction = std::max(contraction, lp_norm(Px(y)) - lp_norm(y) * (1.0 + 1e-12));
      fixed = std::max(fixed, lp_norm(T(x) - x));
    }
  }
  return {idem <= 1e-12 && contraction <= 0.0 && fixed <= 1e-12,
          format("idempotence %.3e, |P_x y|-|y| %.3e, |T x - x| %.3e", idem, contraction, fixed)};
}

inline Outcome contraction_inequality(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = -1.0;
  for (double p : {1.5, 2.0, 3.0}) {
    const LpSpace X(3, p);
    for (double rho : {0.05, 0.3, 0.7}) {
      const LpVector x = random_point(X, rng);
      const auto T = make_T(rho, x);
      worst = std::max(worst, wnl::detail::contraction_excess(T, x, rho, 200, seed + 7));
    }
  }
  return {worst <= 1e-10, format("max |Ty| - |y|(1 - delta(2 rho |y - P_x y|)) %.3e", worst)};
}

inline Outcome sup_drift(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LpSpace X(3, 2.0);
  const auto cfg = suite_config(seed);
  double worst = -1.0;
  for (int t = 0; t < 3; ++t) {
    const int N = 2 + t % 2;
    const auto P = random_diagonal(X, N, seed + 200 + t);
    const double v = v_norm(P, cfg).value;
    const double rho = 0.2;
    const auto PT = precompose(P, make_T(rho, random_point(X, rng)));
    const Difference<Polynomial, Polynomial> D(P, PT);
    double sampled = 0.0;
    for (int k = 0; k < 10000; ++k) sampled = std::max(sampled, std::abs(D.value(random_unit(X, rng).coords())));
    const double optimized = sup_norm(D, X, cfg).value;
    const double bound = rho * v * M_N(N) / 2.0;
    worst = std::max(worst, std::max(sampled, optimized) - bound);
  }
  return {worst <= 1e-8, format("max drift - rho |P|_v M_N/2 %.3e", worst)};
}

inline Outcome lipschitz_bound(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LpSpace X(3, 2.0);
  const auto cfg = suite_config(seed);
  double worst = -1.0;
  for (int t = 0; t < 4; ++t) {
    const int N = 1 + t;
    const auto P = random_diagonal(X, N, seed + 300 + t);
    const double L = v_norm(P, cfg).value * M_N(N) / 4.0;
    for (int k = 0; k < 500; ++k) {
      const LpVector y = random_point(X, rng), z = random_point(X, rng);
      worst = std::max(worst, std::abs(P(y) - P(z)) - L * lp_norm(y - z));
    }
  }
  return {worst <= 1e-10, format("max |P(y)-P(z)| - L|y-z| %.3e", worst)};
}

// --- constants -------------------------------------------------------------

inline Outcome delta_grid(std::uint64_t) {
  double worst = 0.0;
  for (int N = 1; N <= kMaxDegree; ++N) {
    auto f = [N](double r) { return std::pow(r, N) - std::pow(r, N + 2); };
    const auto best = opt::grid_then_golden(f, 0.0, 1.0, 1000001, 1e-12);
    worst = std::max(worst, std::abs(best.value - delta_N(N)));
  }
  return {worst <= 1e-9, format("max |delta_N - grid| %.3e over N=1..30", worst)};
}

inline Outcome delta_monotone(std::uint64_t) {
  bool ok = delta_N(1) > 0.0 && delta_N(1) < 1.0;
  for (int N = 2; N <= kMaxDegree; ++N) ok = ok && delta_N(N) > 0.0 && delta_N(N) < delta_N(N - 1);
  return {ok, format("delta_1 %.9f, delta_30 %.9f", delta_N(1), delta_N(kMaxDegree))};
}

inline Outcome s_alpha_identity(std::uint64_t) {
  double worst = 0.0;
  bool range = true;
  for (double alpha : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    double prev = 0.0;
    for (int N = 1; N <= kMaxDegree; ++N) {
      const double s = s_alpha_N(alpha, N);
      range = range && s > 0.0 && s < 1.0 && s > prev;
      prev = s;
      // s^N = 1 - alpha N!/N^{N+1}
      const double target = 1.0 - alpha / (N * wnl::detail::power_over_factorial(N));
      worst = std::max(worst, std::abs(std::pow(s, N) - target));
    }
  }
  return {range && worst <= 1e-14, format("in (0,1) and increasing %d, max |s^N - target| %.3e", range ? 1 : 0, worst)};
}

inline Outcome s_of_N_bracket(std::uint64_t) {
  bool ok = true;
  double worst = 0.0;
  for (int N = 1; N <= kMaxDegree; ++N) {
    const auto d = s_of_N_detail(N);
    ok = ok && d.z < d.s && d.s < 1.0 && d.f_max > 0.0;
    worst = std::max(worst, (1.0 - d.s * d.s) - d.f_max);
  }
  return {ok && worst <= 0.0, format("z < s(N) < 1 %d, max (1-s^2) - f(z) %.3e", ok ? 1 : 0, worst)};
}

inline Outcome mu_monotone(std::uint64_t) {
  bool ok = true;
  for (double p : {1.5, 2.0, 3.0}) {
    const LpSpace X(2, p);
    double prev = 0.0;
    for (int i = 1; i <= 1000; ++i) {
      const double rho = i / 1000.0;
      const double m = mu(rho, X);
      ok = ok && m > prev && m < rho;
      prev = m;
    }
  }
  return {ok && mu(0.0, LpSpace(2, 2.0)) == 0.0, format("strictly increasing and below rho %d", ok ? 1 : 0)};
}

inline Outcome M_increasing(std::uint64_t) {
  bool ok = true;
  for (int N = 2; N <= 10; ++N) ok = ok && M_N(N) > M_N(N - 1) && M_N(N - 1) > 0.0;
  return {ok, format("M_1 %.6f, M_2 %.6f, M_10 %.6e", M_N(1), M_N(2), M_N(10))};
}

// --- norms -----------------------------------------------------------------

inline Outcome scaling_equivariance(std::uint64_t seed) {
  const LpSpace X(3, 2.0);
  const auto cfg = suite_config(seed);
  const auto P = random_diagonal(X, 2, seed + 400);
  const double a = 2.5;
  const auto Pa = P.scaled(a);
  const double e_s = rel_err(s_norm(Pa, 0.6, cfg).value, a * s_norm(P, 0.6, cfg).value);
  const double e_sup = rel_err(sup_norm(Pa, cfg).value, a * sup_norm(P, cfg).value);
  const auto v = v_norm(P, cfg);
  const double e_v = rel_err(v_norm(Pa, cfg).value, a * v.value);
  const double e_w = rel_err(weighted_value(Pa, v.witness), a * v.value);
  const double worst = std::max({e_s, e_sup, e_v, e_w});
  return {worst <= 1e-8, format("max rel err %.3e (s, sup, v, witness)", worst)};
}

inline Outcome radial_law(std::uint64_t seed) {
  const LpSpace X(3, 2.0);
  const auto cfg = suite_config(seed);
  double worst = 0.0;
  for (int N = 1; N <= 3; ++N) {
    const auto P = random_diagonal(X, N, seed + 500 + N, true);
    const double s = 0.4, r = 0.9;
    const double lhs = s_norm(P, r, cfg).value;
    const double rhs = std::pow(r / s, N) * s_norm(P, s, cfg).value;
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  return {worst <= 1e-6, format("max rel err %.3e", worst)};
}

inline Outcome v_restriction(std::uint64_t seed) {
  const LpSpace X(3, 2.0);
  const auto cfg = suite_config(seed);
  double worst = 0.0;
  for (int N = 1; N <= 3; ++N) {
    const auto P = random_diagonal(X, N, seed + 600 + N);
    const double a = v_norm(P, cfg).value;
    const double b = v_norm_on(P, X, 1.0, cfg).value;
    worst = std::max(worst, std::abs(a - b));
  }
  return {worst <= 1e-8, format("max |[0,s(N)] - [0,1]| %.3e", worst)};
}

inline Outcome witness_feasibility(std::uint64_t seed) {
  const LpSpace X(3, 2.0);
  const auto cfg = suite_config(seed);
  double radius = 0.0, value = 0.0;
  bool interior = true;
  for (int N = 1; N <= 3; ++N) {
    const auto P = random_diagonal(X, N, seed + 700 + N);
    const auto s = s_norm(P, 0.7, cfg);
    radius = std::max(radius, std::abs(lp_norm(s.witness) - 0.7));
    value = std::max(value, std::abs(s.value - std::abs(P(s.witness))));
    const auto v = v_norm(P, cfg);
    radius = std::max(radius, std::abs(lp_norm(v.witness) - v.s_star));
    value = std::max(value, std::abs(v.value - weighted_value(P, v.witness)));
    interior = interior && v.s_star < 1.0 && lp_norm(v.witness) < 1.0;
  }
  return {interior && radius <= 1e-9 && value <= 1e-10,
          format("interior %d, radius err %.3e, value err %.3e", interior ? 1 : 0, radius, value)};
}

inline Outcome fN_ladder(std::uint64_t seed) {
  const LpSpace X(3, 2.0);
  const auto cfg = suite_config(seed);
  double worst = 0.0, prev = 1.0;
  bool decreasing = true;
  for (int N = 1; N <= 8; ++N) {
    const auto f = make_fN(Functional::coordinate(X, 0), N);
    const double ratio = v_norm(f, cfg).value / sup_norm(f, cfg).value;
    worst = std::max(worst, std::abs(ratio - delta_N(N)));
    decreasing = decreasing && ratio < prev;
    prev = ratio;
  }
  return {decreasing && worst <= 1e-6, format("decreasing %d, max |ratio - delta_N| %.3e", decreasing ? 1 : 0, worst)};
}

// --- counterexamples -------------------------------------------------------

inline Outcome Pr_upper_bound(std::uint64_t seed) {
  const auto cfg = suite_config(seed);
  const double r = 0.9;
  const auto P = make_Pr(2.0, 2, r, 64);
  double worst = -1.0;
  for (int j = 1; j <= 9; ++j) {
    const double s = r * j / 9.0;
    worst = std::max(worst, s_norm(P, s, cfg).value - exact_sup_Pr(s, r, 2).value);
  }
  return {worst <= 1e-9, format("max numeric - closed form %.3e (s <= r)", worst)};
}

inline Outcome Pr_escape_rate(std::uint64_t seed) {
  const auto cfg = suite_config(seed);
  std::vector<double> gaps;
  std::string detail = "gaps";
  bool escape = true;
  for (int n : {16, 32, 64, 128}) {
    const auto res = sup_norm(make_Pr(2.0, 2, 0.9, n), cfg);
    gaps.push_back(exact_sup_Pr(1.0, 0.9, 2).value - res.value);
    escape = escape && dominant_index(res.witness) == n;
    detail += format(" %.3e", gaps.back());
  }
  bool halves = true;
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    const double ratio = gaps[i - 1] > 0.0 ? gaps[i] / gaps[i - 1] : -1.0;
    halves = halves && std::abs(ratio - 0.5) <= 0.1;
  }
  return {escape && halves, detail + format(", escape %d", escape ? 1 : 0)};
}

inline Outcome fN_delta(std::uint64_t seed) {
  const LpSpace X(4, 2.0);
  const auto cfg = suite_config(seed);
  double worst = 0.0;
  for (int N = 1; N <= 8; ++N) {
    const auto f = make_fN(Functional::coordinate(X, 1), N);
    worst = std::max(worst, std::abs(v_norm(f, cfg).value - delta_N(N)));
  }
  return {worst <= 1e-6, format("max |v(f_N) - delta_N| %.3e", worst)};
}

// --- bollobas --------------------------------------------------------------

inline Outcome schedule_sums(std::uint64_t) {
  const LpSpace X(4, 2.0);
  bool ok = true;
  std::string detail;
  for (const auto& s : {Schedule::faithful(0.05, 2, X), Schedule::practical(0.1, 20.0, X)}) {
    ok = ok && s.M_times_sum() <= s.eps() && s.M_times_tail() <= s.eta();
    detail += format("%s: M sum %.3e <= %.3e, M tail %.3e <= %.3e; ", std::string(to_string(s.mode())).c_str(),
                     s.M_times_sum(), s.eps(), s.M_times_tail(), s.eta());
  }
  return {ok, detail};
}

inline Outcome run_invariants(const BollobasResult& r, std::string& detail) {
  bool drift = true, tele = true, vbounds = true, tube = true, loc = true;
  for (const auto& st : r.steps) {
    drift = drift && st.drift <= st.drift_bound + 1e-6;
    tele = tele && st.telescoping <= st.telescoping_bound + 1e-6 && st.telescoping_bound <= r.eps;
    vbounds = vbounds && st.v_next > 0.5 && st.v_next < 2.0;
    tube = tube && st.dist_next <= st.rho;
    loc = loc && st.localization.holds;
  }
  const double to_x1 = r.steps.empty() ? 0.0 : tube_projection(r.y.coords(), r.steps.front().x.coords(), r.y.space().p()).distance;
  const bool final_tube = r.steps.empty() || to_x1 <= r.steps.front().rho;
  detail = format("steps %zu, |P-Q| %.3e, d(y,x) %.3e, margin %.3e, drift %d, telescoping %d, v in (1/2,2) %d, "
                  "tube %d, localization %d, y in [x_1]_rho_1 %d",
                  r.steps.size(), r.sup_distance, r.span_distance, r.attainment_margin, drift ? 1 : 0, tele ? 1 : 0,
                  vbounds ? 1 : 0, tube ? 1 : 0, loc ? 1 : 0, final_tube ? 1 : 0);
  return {r.guarantees_hold() && drift && tele && vbounds && tube && loc && final_tube, detail};
}

inline Outcome bollobas_run(std::uint64_t seed, ScheduleMode mode, double eps) {
  const LpSpace X(4, 2.0);
  const auto cfg = suite_config(seed);
  const auto np = normalize_v(random_diagonal(X, 2, seed + 800), cfg);
  const auto v = v_norm(np.P, cfg);
  std::string detail;
  try {
    const auto r = bollobas_correct(np.P, v.witness, eps, mode, cfg);
    auto out = run_invariants(r, detail);
    const auto mon = cauchy_monitor(r);
    out.passed = out.passed && mon.ok();
    out.detail += format(", monitor %s", std::string(to_string(mon.status)).c_str());
    return out;
  } catch (const BollobasError& e) {
    run_invariants(e.result(), detail);
    return {false, std::string(to_string(e.code())) + ": " + detail};
  }
}

}  // namespace detail

inline std::vector<Property> properties() {
  using namespace detail;
  return {
      {"space.norm_axioms", norm_axioms},
      {"space.duality_holder", duality_holder},
      {"space.distance_bounds", distance_bounds},
      {"space.modulus_lower_bound", modulus_lower_bound},
      {"space.weight_profile", weight_profile},
      {"polynomial.homogeneity", component_homogeneity},
      {"polynomial.precompose", precompose_structure},
      {"polynomial.projection", projection_properties},
      {"polynomial.contraction", contraction_inequality},
      {"polynomial.sup_drift", sup_drift},
      {"polynomial.lipschitz", lipschitz_bound},
      {"constants.delta_grid", delta_grid},
      {"constants.delta_monotone", delta_monotone},
      {"constants.s_alpha_identity", s_alpha_identity},
      {"constants.s_of_N_bracket", s_of_N_bracket},
      {"constants.mu_monotone", mu_monotone},
      {"constants.M_increasing", M_increasing},
      {"norms.scaling_equivariance", scaling_equivariance},
      {"norms.radial_law", radial_law},
      {"norms.v_restriction", v_restriction},
      {"norms.witness_feasibility", witness_feasibility},
      {"norms.fN_ladder", fN_ladder},
      {"counterexamples.Pr_upper_bound", Pr_upper_bound},
      {"counterexamples.Pr_escape_rate", Pr_escape_rate},
      {"counterexamples.fN_delta", fN_delta},
      {"bollobas.schedule_sums", schedule_sums},
      {"bollobas.practical_run", [](std::uint64_t s) { return bollobas_run(s, ScheduleMode::Practical, 0.1); }},
      {"bollobas.faithful_run", [](std::uint64_t s) { return bollobas_run(s, ScheduleMode::Faithful, 0.05); }},
  };
}

/// Runs every property whose name contains `filter` (all when empty). Each
/// property sees its own seed derived from `seed` and its position.
inline SuiteReport run_suite(std::uint64_t seed, const std::string& filter = "") {
  SuiteReport rep{seed, {}};
  const auto props = properties();
  for (std::size_t i = 0; i < props.size(); ++i) {
    const auto& prop = props[i];
    if (!filter.empty() && prop.name.find(filter) == std::string::npos) continue;
    const std::uint64_t s = seed * 1000003ULL + i;
    try {
      const Outcome o = prop.check(s);
      rep.results.push_back({prop.name, o.passed, o.detail});
    } catch (const std::exception& e) {
      rep.results.push_back({prop.name, false, std::string("threw ") + e.what()});
    }
  }
  return rep;
}

}  // namespace wnl::verify

#endif  // WNL_VERIFY_HPP
