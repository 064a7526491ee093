// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 6   run one
//
// Exit status is nonzero when any selected criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "wnl/wnl.hpp"

using namespace wnl;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// max of r^N - r^{N+2}: 10^6-point grid, then bisection-style refinement
double delta_oracle(int N) {
  auto g = [N](double r) { return std::pow(r, N) - std::pow(r, N + 2); };
  const int points = 1000000;
  double best = 0.0, arg = 0.0;
  for (int i = 0; i <= points; ++i) {
    const double r = static_cast<double>(i) / points;
    const double v = g(r);
    if (v > best) best = v, arg = r;
  }
  for (double h = 1.0 / points; h > 1e-16; h /= 2.0)
    for (double r : {arg - h, arg + h})
      if (r >= 0.0 && r <= 1.0 && g(r) > best) best = g(r), arg = r;
  return best;
}

Verdict ac1() {
  Stopwatch sw;
  double worst = 0.0;
  int worst_N = 0;
  for (int N = 1; N <= 30; ++N) {
    const double e = std::abs(delta_N(N) - delta_oracle(N));
    if (e > worst) worst = e, worst_N = N;
  }
  const double e2 = std::abs(delta_N(2) - 0.25);
  const double t = sw.seconds();
  return {worst <= 1e-9 && e2 <= 1e-12 && t < 5.0,
          fmt("max |delta_N - grid| %.3e (N=%d), |delta_2 - 1/4| %.3e, %.2f s", worst, worst_N, e2, t)};
}

Verdict ac2() {
  Stopwatch sw;
  const LpSpace X(8, 2.0);
  double worst = 0.0;
  int count = 0;
  for (int N = 1; N <= 4; ++N) {
    for (int i = 0; i < 50; ++i, ++count) {
      OptimizerConfig cfg;
      cfg.seed = 1000 * N + i;
      const auto P = random_diagonal(X, N, cfg.seed, true);
      const double sup = sup_norm(P, cfg).value;
      worst = std::max(worst, std::abs(v_norm(P, cfg).value - delta_N(N) * sup) / sup);
    }
  }
  const double t = sw.seconds();
  return {worst <= 1e-4 && t < 120.0, fmt("%d polynomials, max |v - delta_N sup|/sup %.3e, %.1f s", count, worst, t)};
}

Verdict ac3() {
  const LpSpace X(4, 2.0);
  double worst = 0.0, prev = 1.0;
  bool decreasing = true;
  for (int N = 1; N <= 8; ++N) {
    const double v = v_norm(make_fN(Functional::coordinate(X, 0), N)).value;
    worst = std::max(worst, std::abs(v - delta_N(N)));
    decreasing = decreasing && v < prev;
    prev = v;
  }
  return {worst <= 1e-6 && decreasing, fmt("max |v(f_N) - delta_N| %.3e, strictly decreasing %s", worst, decreasing ? "yes" : "no")};
}

// The random suite shared by criteria 4 and 5.
struct SuiteCase {
  Polynomial P;
  OptimizerConfig cfg;
};

std::vector<SuiteCase> random_suite() {
  const LpSpace X(6, 2.0);
  std::vector<SuiteCase> out;
  for (int i = 0; i < 100; ++i) {
    OptimizerConfig cfg;
    cfg.seed = 5000 + i;
    const int N = 1 + i % 3;
    out.push_back({i % 2 == 0 ? random_diagonal(X, N, cfg.seed) : random_mixed(X, N, cfg.seed), cfg});
  }
  return out;
}

Verdict ac4() {
  Stopwatch sw;
  double worst_lemma = 1e300, worst_equiv = 1e300;
  int violations = 0;
  for (const auto& c : random_suite()) {
    const auto sup = sup_norm(c.P, c.cfg);
    const auto v = v_norm(c.P, c.cfg);
    for (int j = 1; j <= 20; ++j) {
      const double s = j / 21.0;
      const auto r = check_lower_bound_lemma(c.P, s, c.cfg, &sup);
      worst_lemma = std::min(worst_lemma, r.lhs - r.rhs);
      if (!r.holds) ++violations;
      const double alpha = j / 21.0;
      const auto e = check_equivalence(c.P, alpha, c.cfg, &sup, &v);
      worst_equiv = std::min({worst_equiv, e.s_alpha_norm - e.rhs1, e.v_norm - e.rhs2});
      if (!e.holds()) ++violations;
    }
  }
  return {violations == 0 && worst_lemma >= -1e-8 && worst_equiv >= -1e-8,
          fmt("100 polynomials x 20 radii x 20 alphas: %d violations, min lemma slack %.3e, min equivalence slack %.3e, %.1f s",
              violations, worst_lemma, worst_equiv, sw.seconds())};
}

Verdict ac5() {
  double worst = 0.0;
  for (const auto& c : random_suite()) {
    const double a = v_norm(c.P, c.cfg).value;
    const double b = v_norm_on(c.P, c.P.space(), 1.0, c.cfg).value;
    worst = std::max(worst, std::abs(a - b));
  }
  return {worst <= 1e-8, fmt("max |search on [0,1] - search on [0,s(N)]| %.3e over 100 polynomials", worst)};
}

Verdict ac6() {
  const auto rep = verify_Pr(2.0, 2, 0.9, 64, {}, 9);
  double worst_value = 0.0, worst_dist = 0.0;
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    worst_value = std::max(worst_value, std::abs(rep.rows[i].gap));
    worst_dist = std::max(worst_dist, rep.rows[i].witness_distance);
  }
  const auto& one = rep.rows.back();
  const auto r128 = sup_norm(make_Pr(2.0, 2, 0.9, 128));
  const double gap128 = exact_sup_Pr(1.0, 0.9, 2).value - r128.value;
  const double ratio = gap128 / one.gap;
  const bool halves = one.gap > 0.0 && std::abs(ratio - 0.5) <= 0.1;
  const bool pass = rep.clause_values && rep.clause_escape && halves;
  return {pass, fmt("s<=r: max |numeric - closed form| %.3e, max witness distance %.3e; s=1: gap %.3e, escape %d; "
                    "gap ratio 128/64 %.3f; numeric sup at s=1 %.6f vs closed form %.6f",
                    worst_value, worst_dist, one.gap, one.escape_index, ratio, one.numeric, one.exact)};
}

Verdict ac7() {
  const auto rep = verify_Q(2.0, 2, 64);
  std::string rows;
  bool rows_ok = true;
  for (const auto& r : rep.rows) {
    rows += fmt(" s=%.2f gap %.3e<=%.3e esc %d;", r.s, std::abs(r.gap), r.allowed_gap + 1e-6, r.escape_index);
    rows_ok = rows_ok && std::abs(r.gap) <= r.allowed_gap + 1e-6 && r.escape_index == 64;
  }
  const bool pass = std::abs(rep.sup_value - 2.0) <= 1e-6 && rep.sup_witness_distance <= 1e-3 && rows_ok;
  return {pass, fmt("sup %.9f at e_%d (distance %.2e);", rep.sup_value, rep.sup_index, rep.sup_witness_distance) + rows};
}

Verdict ac8() {
  Stopwatch sw;
  const LpSpace X(4, 2.0);
  bool all = true;
  std::string detail;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    OptimizerConfig cfg;
    cfg.seed = seed;
    const auto np = normalize_v(random_diagonal(X, 2, 700 + seed), cfg);
    const auto x = v_norm(np.P, cfg).witness;
    try {
      const auto r = bollobas_correct(np.P, x, 0.1, ScheduleMode::Practical, cfg);
      bool inv = true;
      for (const auto& st : r.steps)
        inv = inv && st.telescoping <= st.telescoping_bound + 1e-6 && st.telescoping_bound <= 0.1 && st.v_next > 0.5 &&
              st.v_next < 2.0 && st.localization.holds;
      const bool ok = r.sup_distance <= 0.1 && r.span_distance <= 0.1 && r.attainment_margin <= 1e-6 && inv;
      all = all && ok;
      detail += fmt(" seed %d: |P-Q| %.2e d %.2e margin %.2e inv %s;", int(seed), r.sup_distance, r.span_distance,
                    r.attainment_margin, inv ? "ok" : "FAIL");
    } catch (const Error& e) {
      all = false;
      detail += fmt(" seed %d: %s;", int(seed), e.what());
    }
  }
  const double t = sw.seconds();
  return {all && t < 600.0, fmt("%.1f s;", t) + detail};
}

Verdict ac9() {
  const LpSpace X(4, 2.0);
  OptimizerConfig cfg;
  const auto np = normalize_v(random_diagonal(X, 2, 901), cfg);
  const auto x = v_norm(np.P, cfg).witness;
  const auto r = bollobas_correct(np.P, x, 0.05, ScheduleMode::Faithful, cfg);
  double drift = -1e300, contraction = -1e300;
  for (const auto& st : r.steps) {
    drift = std::max(drift, st.drift - st.drift_bound);
    contraction = std::max(contraction, st.contraction_excess);
  }
  const bool pass = !r.steps.empty() && drift <= 1e-10 && contraction <= 1e-10 && r.sup_distance <= r.eps;
  return {pass, fmt("%zu iterations, rho_1 %.3e, max drift - bound %.3e, max contraction excess %.3e, |P-Q| %.3e <= %.2f",
                    r.steps.size(), r.steps.empty() ? 0.0 : r.steps.front().rho, drift, contraction, r.sup_distance, r.eps)};
}

std::pair<int, std::string> run_binary(const std::string& args) {
  FILE* pipe = popen((std::string(WNL_BINARY) + " " + args).c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Verdict ac10() {
  const auto a = run_binary("verify --seed 20240601");
  const auto b = run_binary("verify --seed 20240601");
  const bool same = a.second == b.second && !a.second.empty();
  return {same, fmt("two reports of %zu bytes, identical %s (suite exit %d)", a.second.size(), same ? "yes" : "no", a.first)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "delta_N grid oracle", ac1},         {2, "homogeneous identity", ac2},
      {3, "f_N ladder", ac3},                  {4, "lower-bound lemma and equivalence", ac4},
      {5, "v-norm restriction", ac5},          {6, "P_r verification", ac6},
      {7, "Q verification", ac7},              {8, "practical correction", ac8},
      {9, "faithful correction", ac9},         {10, "verify determinism", ac10},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 64;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw ") + e.what()};
    }
    std::printf("[%s] AC%d %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 64;
  }
  return failed == 0 ? 0 : 1;
}
