#ifndef WNL_SPACE_HPP
#define WNL_SPACE_HPP

// Finite-dimensional complex l_p spaces.
//
// The hot loops of the optimizers work directly on std::span<const cplx>; the
// LpVector / Functional value types wrap those buffers together with the space
// they belong to for the public API.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wnl/error.hpp"
#include "wnl/optimize.hpp"

namespace wnl {

using cplx = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class LpSpace {
 public:
  LpSpace(std::size_t dim, double p) : dim_(dim), p_(p) {
    if (dim == 0) throw Error(ErrorCode::OutOfDomain, "dimension must be at least 1");
    if (!(p >= 1.0)) throw Error(ErrorCode::OutOfDomain, "exponent p must satisfy p >= 1");
  }

  std::size_t dim() const noexcept { return dim_; }
  double p() const noexcept { return p_; }
  bool is_infinite() const noexcept { return std::isinf(p_); }
  bool is_uniformly_convex() const noexcept { return p_ > 1.0 && !is_infinite(); }

  /// Dual exponent q with 1/p + 1/q = 1.
  double dual_exponent() const noexcept {
    if (p_ == 1.0) return kInfinity;
    if (is_infinite()) return 1.0;
    return p_ / (p_ - 1.0);
  }

  void require_uniformly_convex(std::string_view what) const {
    if (!is_uniformly_convex())
      throw Error(ErrorCode::NotUniformlyConvex, std::string(what) + " requires 1 < p < inf");
  }

  friend bool operator==(const LpSpace&, const LpSpace&) = default;

 private:
  std::size_t dim_;
  double p_;
};

// ---------------------------------------------------------------------------
// Raw coordinate helpers.

inline double norm(std::span<const cplx> v, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
  }
  if (p == 2.0) {
    // scaled accumulation avoids overflow/underflow for extreme magnitudes
    double scale = 0.0;
    for (const auto& z : v) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return 0.0;
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z / scale);
    return scale * std::sqrt(acc);
  }
  double scale = 0.0;
  for (const auto& z : v) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& z : v) acc += std::pow(std::abs(z) / scale, p);
  return scale * std::pow(acc, 1.0 / p);
}

/// Real gradient of x -> ||x||_p written as a complex vector (d/dRe + i d/dIm).
/// Coordinates where the derivative is singular (x_i = 0, p < 2) get 0; for
/// p = inf the first maximal coordinate carries the whole subgradient.
inline void norm_gradient(std::span<const cplx> x, double p, std::span<cplx> out) {
  std::fill(out.begin(), out.end(), cplx{});
  const double nx = norm(x, p);
  if (nx == 0.0) return;
  if (std::isinf(p)) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
      if (std::abs(x[i]) > std::abs(x[arg])) arg = i;
    out[arg] = x[arg] / std::abs(x[arg]);
    return;
  }
  if (p == 2.0) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / nx;
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    if (a == 0.0) continue;
    out[i] = x[i] * std::pow(a / nx, p - 1.0) / a;
  }
}

/// Real inner product Re sum a_i conj(b_i) on C^n viewed as R^{2n}.
inline double real_dot(std::span<const cplx> a, std::span<const cplx> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return acc;
}

/// Bilinear pairing sum a_i b_i (no conjugation).
inline cplx bilinear(std::span<const cplx> a, std::span<const cplx> b) {
  cplx acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// ---------------------------------------------------------------------------

class LpVector {
 public:
  LpVector(LpSpace space, std::vector<cplx> coords) : space_(space), coords_(std::move(coords)) {
    if (coords_.size() != space_.dim())
      throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(coords_.size()) +
                                                    " does not match dimension " + std::to_string(space_.dim()));
  }

  static LpVector zero(LpSpace space) { return LpVector(space, std::vector<cplx>(space.dim())); }

  /// Canonical basis vector e_i, 0-based.
  static LpVector basis(LpSpace space, std::size_t i, cplx scale = 1.0) {
    if (i >= space.dim()) throw Error(ErrorCode::OutOfRange, "basis index out of range");
    std::vector<cplx> c(space.dim());
    c[i] = scale;
    return LpVector(space, std::move(c));
  }

  const LpSpace& space() const noexcept { return space_; }
  std::span<const cplx> coords() const noexcept { return coords_; }
  const std::vector<cplx>& data() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  cplx operator[](std::size_t i) const { return coords_[i]; }

  LpVector scaled(cplx alpha) const {
    std::vector<cplx> c = coords_;
    for (auto& z : c) z *= alpha;
    return LpVector(space_, std::move(c));
  }

  friend LpVector operator+(const LpVector& a, const LpVector& b) { return combine(a, b, 1.0); }
  friend LpVector operator-(const LpVector& a, const LpVector& b) { return combine(a, b, -1.0); }
  friend LpVector operator*(cplx alpha, const LpVector& v) { return v.scaled(alpha); }

  friend bool operator==(const LpVector&, const LpVector&) = default;

 private:
  static LpVector combine(const LpVector& a, const LpVector& b, double sign) {
    if (!(a.space_ == b.space_)) throw Error(ErrorCode::DimensionMismatch, "vectors live in different spaces");
    std::vector<cplx> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + sign * b.coords_[i];
    return LpVector(a.space_, std::move(c));
  }

  LpSpace space_;
  std::vector<cplx> coords_;
};

/// Element of the dual (l_q). Acts by the bilinear sum; conjugates are baked
/// into the coordinates at construction.
class Functional {
 public:
  Functional(LpSpace space, std::vector<cplx> coords) : space_(space), coords_(std::move(coords)) {
    if (coords_.size() != space_.dim()) throw Error(ErrorCode::DimensionMismatch, "functional length mismatch");
  }

  /// Coordinate functional e_i^*, 0-based.
  static Functional coordinate(LpSpace space, std::size_t i) {
    if (i >= space.dim()) throw Error(ErrorCode::OutOfRange, "coordinate index out of range");
    std::vector<cplx> c(space.dim());
    c[i] = 1.0;
    return Functional(space, std::move(c));
  }

  const LpSpace& space() const noexcept { return space_; }
  std::span<const cplx> coords() const noexcept { return coords_; }
  const std::vector<cplx>& data() const noexcept { return coords_; }

  cplx operator()(std::span<const cplx> y) const { return bilinear(coords_, y); }
  cplx operator()(const LpVector& y) const {
    if (!(y.space() == space_)) throw Error(ErrorCode::DimensionMismatch, "functional applied across spaces");
    return bilinear(coords_, y.coords());
  }

  double dual_norm() const { return norm(coords_, space_.dual_exponent()); }

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  LpSpace space_;
  std::vector<cplx> coords_;
};

inline double lp_norm(const LpVector& v) { return norm(v.coords(), v.space().p()); }

/// Norming functional: ||f||_q = 1 and f(x) = ||x||_p.
/// p = 1 puts 0 on the zero coordinates; p = inf picks the lowest index among
/// the coordinates of maximal modulus.
inline Functional duality_functional(const LpVector& x) {
  const double p = x.space().p();
  const double nx = lp_norm(x);
  if (nx == 0.0) throw Error(ErrorCode::ZeroVector, "duality functional of the zero vector");
  std::vector<cplx> f(x.size());
  if (x.space().is_infinite()) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
      if (std::abs(x[i]) > std::abs(x[arg])) arg = i;
    f[arg] = std::conj(x[arg]) / std::abs(x[arg]);
  } else if (p == 1.0) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != cplx{}) f[i] = std::conj(x[i]) / std::abs(x[i]);
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double a = std::abs(x[i]);
      if (a == 0.0) continue;
      // conj(x_i) |x_i|^{p-2} / ||x||^{p-1}, arranged to stay in range
      f[i] = std::conj(x[i]) / a * std::pow(a / nx, p - 1.0);
    }
  }
  return Functional(x.space(), std::move(f));
}

struct SpanProjection {
  cplx lambda;      ///< minimizer of ||y - lambda x||
  double distance;  ///< the minimum
  bool converged = true;
};

namespace detail {

inline SpanProjection span_projection(std::span<const cplx> y, std::span<const cplx> x, double p) {
  double xx = 0.0;
  cplx yx{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    xx += std::norm(x[i]);
    yx += y[i] * std::conj(x[i]);
  }
  if (xx == 0.0) throw Error(ErrorCode::ZeroVector, "distance to the span of the zero vector");
  const cplx lambda_ls = yx / xx;

  std::vector<cplx> r(y.size());
  auto residual = [&](cplx lambda) {
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = y[i] - lambda * x[i];
    return norm(r, p);
  };

  if (p == 2.0) return {lambda_ls, residual(lambda_ls), true};

  // The objective is convex in lambda, so every start lands in the same
  // minimum; several starts guard against a stalled simplex.
  const double radius = std::max(1e-3, 0.5 * norm(y, p) / norm(x, p));
  auto objective = [&](const std::array<double, 2>& z) { return residual(cplx{z[0], z[1]}); };
  std::array<opt::PlanarOptimum, 8> runs;
  for (int k = 0; k < 8; ++k) {
    cplx start = lambda_ls;
    if (k > 0) start += std::polar(radius, 2.0 * std::numbers::pi * (k - 1) / 7.0);
    runs[k] = opt::nelder_mead_2d(objective, {start.real(), start.imag()}, radius, 1e-12);
  }
  const auto& best = *std::min_element(runs.begin(), runs.end(),
                                       [](const auto& a, const auto& b) { return a.value < b.value; });
  const double slack = 1e-14 * std::max(1.0, best.value);
  const bool converged = std::any_of(runs.begin(), runs.end(), [&](const auto& r) {
    return r.converged && r.value <= best.value + slack;
  });
  return {cplx{best.arg[0], best.arg[1]}, best.value, converged};
}

}  // namespace detail

/// min over complex lambda of ||y - lambda x||_p.
inline double dist_to_span(const LpVector& y, const LpVector& x) {
  if (!(y.space() == x.space())) throw Error(ErrorCode::DimensionMismatch, "dist_to_span across spaces");
  const auto res = detail::span_projection(y.coords(), x.coords(), y.space().p());
  if (!res.converged) throw Error(ErrorCode::NoConvergence, "2-D span minimization missed its tolerance");
  return res.distance;
}

/// Closed-form lower bound for the modulus of convexity of complex l_p:
/// 1 - (1 - (t/2)^p)^{1/p} for p >= 2 (Clarkson) and (p-1) t^2 / 8 for
/// 1 < p < 2.
inline double modulus_of_convexity(const LpSpace& space, double t) {
  space.require_uniformly_convex("modulus of convexity");
  if (!(t >= 0.0 && t <= 2.0)) throw Error(ErrorCode::OutOfDomain, "modulus argument must lie in [0, 2]");
  const double p = space.p();
  if (p >= 2.0) {
    const double u = std::pow(t / 2.0, p);
    // 1 - (1-u)^{1/p} without cancellation for small u
    return -std::expm1(std::log1p(-u) / p);
  }
  return (p - 1.0) * t * t / 8.0;
}

// ---------------------------------------------------------------------------

/// Radial weight v(x) = w(||x||). Only the standard weight 1 - s^2 is wired
/// through the norm computations.
struct Weight {
  std::string name;
  std::function<double(double)> profile;
};

inline Weight standard_weight() {
  return Weight{"standard", [](double s) { return 1.0 - s * s; }};
}

inline double weight_eval(const Weight& w, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfDomain, "weight argument must lie in [0, 1]");
  return w.profile(s);
}

}  // namespace wnl

#endif  // WNL_SPACE_HPP
