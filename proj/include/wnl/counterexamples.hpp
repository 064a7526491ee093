#ifndef WNL_COUNTEREXAMPLES_HPP
#define WNL_COUNTEREXAMPLES_HPP

// Explicit polynomials whose suprema are (or are not) attained, their closed
// forms, and truncation diagnostics. On a truncation to n coordinates every
// supremum is attained; non-attainment shows up as the maximizer escaping to
// the last coordinate with a gap shrinking like 1/n.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wnl/constants.hpp"
#include "wnl/error.hpp"
#include "wnl/norms.hpp"
#include "wnl/polynomial.hpp"
#include "wnl/space.hpp"

namespace wnl {

struct TruncationDiagnostic {
  int n_trunc;
  double gap;        ///< closed-form sup minus numerical value
  int escape_index;  ///< 1-based index of the largest coordinate of the maximizer
};

/// 1-based index of the first coordinate of maximal modulus.
inline int dominant_index(const LpVector& x) {
  int idx = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    if (a > best) {
      best = a;
      idx = static_cast<int>(i) + 1;
    }
  }
  return idx;
}

inline TruncationDiagnostic truncation_diagnostic(const NormResult& r, double exact) {
  return {static_cast<int>(r.witness.size()), exact - r.value, dominant_index(r.witness)};
}

/// min over unit complex theta of ||x - theta * s * e_j|| (j 0-based).
inline double distance_to_basis_ray(const LpVector& x, std::size_t j, double s) {
  const cplx xj = x[j];
  const cplx phase = std::abs(xj) > 0.0 ? xj / std::abs(xj) : cplx{1.0, 0.0};
  return lp_norm(x - LpVector::basis(x.space(), j, phase * s));
}

/// Exact sup of |P| over the sphere of radius s for a chain-free polynomial
/// made of Diagonal components of degrees >= p. Then the map t -> g_n(t)/t^p is
/// increasing, so the supremum sits on a single coordinate with aligned phase:
/// max_n sum_k |c_k(n)| s^k. Returns nullopt for any other polynomial.
inline std::optional<double> diagonal_basis_sup(const Polynomial& P, double s) {
  if (!P.chain().empty()) return std::nullopt;
  const double p = P.space().p();
  if (std::isinf(p)) return std::nullopt;
  for (const auto& c : P.components()) {
    if (c.is_zero()) continue;
    if (c.kind() != HomogeneousComponent::Kind::Diagonal || c.degree() < p) return std::nullopt;
  }
  double best = 0.0;
  for (std::size_t n = 0; n < P.dim(); ++n) {
    double acc = 0.0;
    for (const auto& c : P.components())
      if (!c.is_zero()) acc += std::abs(c.coeffs()[n]) * std::pow(s, c.degree());
    best = std::max(best, acc);
  }
  return best;
}

namespace detail {

inline void require_family(double p, int k, int n_trunc) {
  if (!(p >= 1.0) || std::isinf(p)) throw Error(ErrorCode::OutOfDomain, "family needs 1 <= p < inf");
  if (k < p) throw Error(ErrorCode::OutOfDomain, "family needs an integer k >= p");
  if (n_trunc < 1) throw Error(ErrorCode::OutOfDomain, "n_trunc must be >= 1");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// P_r

/// sum_n (1 + r^{-k}/n) x_n^k + (1 - r^{-k-1}/n) x_n^{k+1}, truncated to n_trunc.
inline Polynomial make_Pr(double p, int k, double r, int n_trunc) {
  detail::require_family(p, k, n_trunc);
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::OutOfDomain, "P_r needs r in (0, 1)");
  const LpSpace X(static_cast<std::size_t>(n_trunc), p);
  std::vector<cplx> a(X.dim()), b(X.dim());
  const double rk = std::pow(r, -k), rk1 = std::pow(r, -k - 1);
  for (int n = 1; n <= n_trunc; ++n) {
    a[static_cast<std::size_t>(n - 1)] = 1.0 + rk / n;
    b[static_cast<std::size_t>(n - 1)] = 1.0 - rk1 / n;
  }
  return Polynomial(X, {HomogeneousComponent::diagonal(k, std::move(a)), HomogeneousComponent::diagonal(k + 1, std::move(b))});
}

struct ExactSup {
  double value;
  bool attained;
};

/// Closed form for sup |P_r| on the sphere of radius s: below r the value at
/// s e_1, above r the limit along s e_n.
inline ExactSup exact_sup_Pr(double s, double r, int k) {
  if (!(s > 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfDomain, "exact_sup_Pr needs s in (0, 1]");
  const double base = std::pow(s, k) + std::pow(s, k + 1);
  if (s <= r) return {base + std::pow(s / r, k) - std::pow(s / r, k + 1), true};
  return {base, false};
}

struct PrRow {
  double s;
  double numeric;
  double exact;
  double gap;          ///< exact - numeric
  int escape_index;
  double witness_distance;  ///< to the ray through s e_1 (best phase)
  double basis_sup;    ///< max_n |a_n| s^k + |b_n| s^{k+1}
};

struct PrReport {
  double p;
  int k;
  double r;
  int n_trunc;
  double s_of_N;
  bool hypothesis_r_ge_sN;
  std::vector<PrRow> rows;  ///< grid s <= r, then s = 1
  bool clause_values;       ///< |numeric - exact| <= 1e-6 and witness within 1e-4 of s e_1, s <= r
  bool clause_escape;       ///< s = 1: gap in (0, 2/n_trunc] and escape_index = n_trunc
  bool clause_attainment;   ///< v-norm: s_star <= s(k+1) + 1e-6, interior, margin <= 1e-6
  double v_value;
  double v_s_star;
  double v_margin;
  bool passed() const { return clause_values && clause_escape && clause_attainment; }
  std::string failing_clause() const {
    if (!clause_values) return "values";
    if (!clause_escape) return "escape";
    if (!clause_attainment) return "attainment";
    return "";
  }
};

/// Checks the three clauses on a truncation. The radius grid is s_j = r j / m,
/// j = 1..m. The hypothesis r >= s(k+1) is reported, not enforced.
inline PrReport verify_Pr(double p, int k, double r, int n_trunc, const OptimizerConfig& cfg = {}, int grid = 9) {
  const Polynomial P = make_Pr(p, k, r, n_trunc);
  if (grid < 1) throw Error(ErrorCode::OutOfDomain, "grid must be >= 1");
  PrReport rep{p, k, r, n_trunc, s_of_N(k + 1), false, {}, true, true, true, 0.0, 0.0, 0.0};
  rep.hypothesis_r_ge_sN = r >= rep.s_of_N;

  for (int j = 1; j <= grid; ++j) {
    const double s = r * j / grid;
    const auto res = s_norm(P, s, cfg);
    const double exact = exact_sup_Pr(s, r, k).value;
    PrRow row{s, res.value, exact, exact - res.value, dominant_index(res.witness),
              distance_to_basis_ray(res.witness, 0, s), diagonal_basis_sup(P, s).value_or(NAN)};
    if (!(std::abs(row.gap) <= 1e-6 && row.witness_distance <= 1e-4)) rep.clause_values = false;
    rep.rows.push_back(row);
  }
  {
    const auto res = sup_norm(P, cfg);
    const double exact = exact_sup_Pr(1.0, r, k).value;
    const int esc = dominant_index(res.witness);
    PrRow row{1.0, res.value, exact, exact - res.value, esc,
              distance_to_basis_ray(res.witness, static_cast<std::size_t>(n_trunc - 1), 1.0),
              diagonal_basis_sup(P, 1.0).value_or(NAN)};
    rep.clause_escape = row.gap > 0.0 && row.gap <= 2.0 / n_trunc && esc == n_trunc;
    rep.rows.push_back(row);
  }
  {
    const auto v = v_norm(P, cfg);
    const auto w = attainment_witness(P, v);
    rep.v_value = v.value;
    rep.v_s_star = v.s_star;
    rep.v_margin = w.margin;
    rep.clause_attainment = v.s_star <= rep.s_of_N + 1e-6 && lp_norm(v.witness) < 1.0 && w.margin <= 1e-6;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Q

/// sum_n (1 - 1/n) x_n^k + (1 + 1/n) x_n^{k+1}, truncated to n_trunc.
inline Polynomial make_Q(double p, int k, int n_trunc) {
  detail::require_family(p, k, n_trunc);
  const LpSpace X(static_cast<std::size_t>(n_trunc), p);
  std::vector<cplx> a(X.dim()), b(X.dim());
  for (int n = 1; n <= n_trunc; ++n) {
    a[static_cast<std::size_t>(n - 1)] = 1.0 - 1.0 / n;
    b[static_cast<std::size_t>(n - 1)] = 1.0 + 1.0 / n;
  }
  return Polynomial(X, {HomogeneousComponent::diagonal(k, std::move(a)), HomogeneousComponent::diagonal(k + 1, std::move(b))});
}

/// s^k + s^{k+1}: the sup of |Q| on the sphere of radius s, attained only at s = 1.
inline ExactSup exact_sup_Q(double s, int k) {
  if (!(s > 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfDomain, "exact_sup_Q needs s in (0, 1]");
  return {std::pow(s, k) + std::pow(s, k + 1), s == 1.0};
}

struct QRow {
  double s;
  double numeric;
  double exact;
  double gap;
  int escape_index;
  double allowed_gap;  ///< (s^k - s^{k+1}) / n_trunc
};

struct QReport {
  double p;
  int k;
  int n_trunc;
  double sup_value;
  int sup_index;
  double sup_witness_distance;  ///< to the nearest basis ray
  std::vector<QRow> rows;
  bool clause_sup;
  bool clause_escape;
  bool clause_ball_escape;
  int ball_escape_index;
  double v_value;
  bool passed() const { return clause_sup && clause_escape && clause_ball_escape; }
  std::string failing_clause() const {
    if (!clause_sup) return "sup";
    if (!clause_escape) return "escape";
    if (!clause_ball_escape) return "ball_escape";
    return "";
  }
};

inline QReport verify_Q(double p, int k, int n_trunc, const OptimizerConfig& cfg = {},
                        const std::vector<double>& s_grid = {0.25, 0.5, 0.75}) {
  const Polynomial Q = make_Q(p, k, n_trunc);
  QReport rep{p, k, n_trunc, 0.0, 0, 0.0, {}, false, true, false, 0, 0.0};
  {
    const auto res = sup_norm(Q, cfg);
    rep.sup_value = res.value;
    rep.sup_index = dominant_index(res.witness);
    rep.sup_witness_distance = distance_to_basis_ray(res.witness, static_cast<std::size_t>(rep.sup_index - 1), 1.0);
    rep.clause_sup = std::abs(res.value - 2.0) <= 1e-6 && rep.sup_witness_distance <= 1e-3;
  }
  for (double s : s_grid) {
    if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::OutOfDomain, "Q grid radii must lie in (0, 1)");
    const auto res = s_norm(Q, s, cfg);
    const double exact = exact_sup_Q(s, k).value;
    QRow row{s, res.value, exact, exact - res.value, dominant_index(res.witness),
             (std::pow(s, k) - std::pow(s, k + 1)) / n_trunc};
    if (!(std::abs(row.gap) <= row.allowed_gap + 1e-6 && row.escape_index == n_trunc)) rep.clause_escape = false;
    rep.rows.push_back(row);
  }
  {
    const auto v = v_norm(Q, cfg);
    rep.v_value = v.value;
    rep.ball_escape_index = dominant_index(v.witness);
    rep.clause_ball_escape = rep.ball_escape_index == n_trunc;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// f_N

/// x -> f(x)^N for a unit functional f.
inline Polynomial make_fN(const Functional& f, int N) {
  if (N < 1) throw Error(ErrorCode::OutOfDomain, "f_N needs N >= 1");
  if (std::abs(f.dual_norm() - 1.0) > 1e-12) throw Error(ErrorCode::NotUnitFunctional, "f_N needs a unit functional");
  return Polynomial(f.space(), {HomogeneousComponent::functional_power(N, f)});
}

}  // namespace wnl

#endif  // WNL_COUNTEREXAMPLES_HPP
