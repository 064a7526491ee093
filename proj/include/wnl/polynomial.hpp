#ifndef WNL_POLYNOMIAL_HPP
#define WNL_POLYNOMIAL_HPP

// Scalar polynomials on l_p^n as sums of homogeneous components, each kept in
// one of three closed forms, pre-composed with a lazy chain of rank-one
// updates y -> a y + b g(y) u.

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wnl/error.hpp"
#include "wnl/space.hpp"

namespace wnl {

/// z^k by repeated squaring; std::pow on complex goes through polar form and
/// loses the exactness of small integer powers.
inline cplx ipow(cplx z, int k) {
  cplx result{1.0, 0.0};
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

/// Anything that can be evaluated with its holomorphic gradient
/// (dF/dz_i, i = 1..n) at a point of C^n.
template <class F>
concept HolomorphicMap = requires(const F& f, std::span<const cplx> x, std::span<cplx> g) {
  { f.dim() } -> std::convertible_to<std::size_t>;
  { f.value(x) } -> std::convertible_to<cplx>;
  { f.value_and_gradient(x, g) } -> std::convertible_to<cplx>;
};

class HomogeneousComponent {
 public:
  enum class Kind { Constant, Diagonal, FunctionalPower };

  static HomogeneousComponent constant(cplx c) { return HomogeneousComponent(Kind::Constant, 0, {c}, 1.0); }

  /// x -> sum_i c_i x_i^k
  static HomogeneousComponent diagonal(int k, std::vector<cplx> coeffs) {
    if (k < 1) throw Error(ErrorCode::OutOfDomain, "diagonal component needs degree >= 1");
    return HomogeneousComponent(Kind::Diagonal, k, std::move(coeffs), 1.0);
  }

  /// x -> scale * f(x)^k
  static HomogeneousComponent functional_power(int k, std::vector<cplx> functional, cplx scale = 1.0) {
    if (k < 1) throw Error(ErrorCode::OutOfDomain, "functional power needs degree >= 1");
    return HomogeneousComponent(Kind::FunctionalPower, k, std::move(functional), scale);
  }
  static HomogeneousComponent functional_power(int k, const Functional& f, cplx scale = 1.0) {
    return functional_power(k, f.data(), scale);
  }

  Kind kind() const noexcept { return kind_; }
  int degree() const noexcept { return degree_; }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  cplx scale() const noexcept { return scale_; }

  bool is_zero() const {
    if (scale_ == cplx{}) return true;
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx{}; });
  }

  cplx value(std::span<const cplx> z) const {
    switch (kind_) {
      case Kind::Constant:
        return coeffs_[0];
      case Kind::Diagonal: {
        cplx acc{};
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
          if (coeffs_[i] != cplx{}) acc += coeffs_[i] * ipow(z[i], degree_);
        return acc;
      }
      case Kind::FunctionalPower:
        return scale_ * ipow(bilinear(coeffs_, z), degree_);
    }
    return {};
  }

  /// Returns the value and adds the holomorphic gradient into `grad`.
  cplx accumulate(std::span<const cplx> z, std::span<cplx> grad) const {
    switch (kind_) {
      case Kind::Constant:
        return coeffs_[0];
      case Kind::Diagonal: {
        cplx acc{};
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
          if (coeffs_[i] == cplx{}) continue;
          const cplx lower = ipow(z[i], degree_ - 1);
          acc += coeffs_[i] * lower * z[i];
          grad[i] += static_cast<double>(degree_) * coeffs_[i] * lower;
        }
        return acc;
      }
      case Kind::FunctionalPower: {
        const cplx fz = bilinear(coeffs_, z);
        const cplx lower = ipow(fz, degree_ - 1);
        const cplx factor = scale_ * static_cast<double>(degree_) * lower;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) grad[i] += factor * coeffs_[i];
        return scale_ * lower * fz;
      }
    }
    return {};
  }

  HomogeneousComponent scaled(cplx alpha) const {
    HomogeneousComponent out = *this;
    if (kind_ == Kind::FunctionalPower) {
      out.scale_ *= alpha;
    } else {
      for (auto& c : out.coeffs_) c *= alpha;
    }
    return out;
  }

  friend bool operator==(const HomogeneousComponent&, const HomogeneousComponent&) = default;

 private:
  HomogeneousComponent(Kind kind, int degree, std::vector<cplx> coeffs, cplx scale)
      : kind_(kind), degree_(degree), coeffs_(std::move(coeffs)), scale_(scale) {}

  Kind kind_;
  int degree_;
  std::vector<cplx> coeffs_;
  cplx scale_;
};

/// y -> a y + b g(y) u, with g acting bilinearly.
class RankOneUpdateOperator {
 public:
  RankOneUpdateOperator(double a, double b, std::vector<cplx> u, std::vector<cplx> g)
      : a_(a), b_(b), u_(std::move(u)), g_(std::move(g)) {
    if (u_.size() != g_.size()) throw Error(ErrorCode::DimensionMismatch, "rank-one update: |u| != |g|");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  const std::vector<cplx>& u() const noexcept { return u_; }
  const std::vector<cplx>& g() const noexcept { return g_; }
  std::size_t dim() const noexcept { return u_.size(); }

  void apply(std::span<const cplx> y, std::span<cplx> out) const {
    const cplx gy = b_ * bilinear(g_, y);
    for (std::size_t i = 0; i < u_.size(); ++i) out[i] = a_ * y[i] + gy * u_[i];
  }

  LpVector operator()(const LpVector& y) const {
    if (y.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "operator applied to wrong dimension");
    std::vector<cplx> out(dim());
    apply(y.coords(), out);
    return LpVector(y.space(), std::move(out));
  }

  /// Pull a covector back through the operator: w -> w o T = a w + b (w.u) g.
  void pullback(std::span<cplx> w) const {
    const cplx wu = b_ * bilinear(w, u_);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = a_ * w[i] + wu * g_[i];
  }

  friend bool operator==(const RankOneUpdateOperator&, const RankOneUpdateOperator&) = default;

 private:
  double a_;
  double b_;
  std::vector<cplx> u_;
  std::vector<cplx> g_;
};

class Polynomial {
 public:
  Polynomial(LpSpace space, std::vector<HomogeneousComponent> components,
             std::vector<RankOneUpdateOperator> chain = {})
      : space_(space), components_(std::move(components)), chain_(std::move(chain)) {
    std::vector<int> seen;
    for (const auto& c : components_) {
      if (c.kind() != HomogeneousComponent::Kind::Constant && c.coeffs().size() != space_.dim())
        throw Error(ErrorCode::DimensionMismatch, "component coefficient count does not match dimension");
      if (std::find(seen.begin(), seen.end(), c.degree()) != seen.end())
        throw Error(ErrorCode::OutOfDomain, "duplicate component degree " + std::to_string(c.degree()));
      seen.push_back(c.degree());
    }
    std::sort(components_.begin(), components_.end(),
              [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
    for (const auto& op : chain_)
      if (op.dim() != space_.dim()) throw Error(ErrorCode::DimensionMismatch, "operator dimension mismatch");
  }

  static Polynomial constant(LpSpace space, cplx c) {
    return Polynomial(space, {HomogeneousComponent::constant(c)});
  }

  const LpSpace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const std::vector<HomogeneousComponent>& components() const noexcept { return components_; }
  const std::vector<RankOneUpdateOperator>& chain() const noexcept { return chain_; }

  /// Largest degree carrying a nonzero component; the zero polynomial has degree 0.
  int degree() const {
    int d = 0;
    for (const auto& c : components_)
      if (!c.is_zero()) d = std::max(d, c.degree());
    return d;
  }

  bool is_homogeneous() const {
    int nonzero = 0;
    for (const auto& c : components_)
      if (!c.is_zero()) ++nonzero;
    return nonzero <= 1;
  }

  cplx value(std::span<const cplx> y) const {
    if (chain_.empty()) return sum_components(y);
    const auto z = pushforward(y);
    return sum_components(z);
  }

  cplx value_and_gradient(std::span<const cplx> y, std::span<cplx> grad) const {
    std::fill(grad.begin(), grad.end(), cplx{});
    cplx total{};
    if (chain_.empty()) {
      for (const auto& c : components_) total += c.accumulate(y, grad);
      return total;
    }
    const auto z = pushforward(y);
    for (const auto& c : components_) total += c.accumulate(z, grad);
    // chain_ = [T_1, ..., T_m] acts as T_1 o ... o T_m, so the covector is
    // pulled back through T_1 first.
    for (const auto& op : chain_) op.pullback(grad);
    return total;
  }

  /// Value of the degree-k homogeneous part (after the chain).
  cplx component_value(int k, std::span<const cplx> y) const {
    if (k < 0 || k > degree()) throw Error(ErrorCode::OutOfRange, "component degree out of range");
    const auto it = std::find_if(components_.begin(), components_.end(),
                                 [k](const auto& c) { return c.degree() == k; });
    if (it == components_.end()) return {};
    if (chain_.empty()) return it->value(y);
    return it->value(pushforward(y));
  }

  cplx operator()(const LpVector& y) const {
    check_space(y);
    return value(y.coords());
  }

  Polynomial scaled(cplx alpha) const {
    std::vector<HomogeneousComponent> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.scaled(alpha));
    return Polynomial(space_, std::move(comps), chain_);
  }

  Polynomial with_operator(RankOneUpdateOperator op) const {
    auto chain = chain_;
    chain.push_back(std::move(op));
    return Polynomial(space_, components_, std::move(chain));
  }

  void check_space(const LpVector& y) const {
    if (!(y.space() == space_)) throw Error(ErrorCode::DimensionMismatch, "point lives in a different space");
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<cplx> pushforward(std::span<const cplx> y) const {
    std::vector<cplx> z(y.begin(), y.end());
    std::vector<cplx> tmp(z.size());
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
      it->apply(z, tmp);
      z.swap(tmp);
    }
    return z;
  }

  cplx sum_components(std::span<const cplx> z) const {
    cplx total{};
    for (const auto& c : components_) total += c.value(z);
    return total;
  }

  LpSpace space_;
  std::vector<HomogeneousComponent> components_;
  std::vector<RankOneUpdateOperator> chain_;
};

static_assert(HolomorphicMap<Polynomial>);

/// F - G for two maps on the same space.
template <HolomorphicMap F, HolomorphicMap G>
class Difference {
 public:
  Difference(F f, G g) : f_(std::move(f)), g_(std::move(g)) {
    if (f_.dim() != g_.dim()) throw Error(ErrorCode::DimensionMismatch, "difference of maps on different spaces");
  }

  std::size_t dim() const { return f_.dim(); }
  cplx value(std::span<const cplx> x) const { return f_.value(x) - g_.value(x); }
  cplx value_and_gradient(std::span<const cplx> x, std::span<cplx> grad) const {
    std::vector<cplx> other(grad.size());
    const cplx fv = f_.value_and_gradient(x, grad);
    const cplx gv = g_.value_and_gradient(x, other);
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] -= other[i];
    return fv - gv;
  }

 private:
  F f_;
  G g_;
};

// ---------------------------------------------------------------------------
// Operations.

inline cplx eval(const Polynomial& P, const LpVector& y) { return P(y); }

inline cplx component_eval(const Polynomial& P, int k, const LpVector& y) {
  P.check_space(y);
  return P.component_value(k, y.coords());
}

/// Norm-one projection onto span(x): y -> g(y) u with u = x/||x|| and g the
/// norming functional of u.
inline RankOneUpdateOperator make_projection(const LpVector& x) {
  const double nx = lp_norm(x);
  if (nx == 0.0) throw Error(ErrorCode::ZeroVector, "projection onto the span of the zero vector");
  const LpVector u = x.scaled(1.0 / nx);
  const Functional g = duality_functional(u);
  return RankOneUpdateOperator(0.0, 1.0, u.data(), g.data());
}

/// (1 - rho) I + rho P_x; rho = 0 gives the identity.
inline RankOneUpdateOperator make_T(double rho, const LpVector& x) {
  if (!(rho >= 0.0 && rho < 1.0)) throw Error(ErrorCode::OutOfDomain, "rho must lie in [0, 1)");
  const auto proj = make_projection(x);
  return RankOneUpdateOperator(1.0 - rho, rho, proj.u(), proj.g());
}

inline Polynomial precompose(const Polynomial& P, const RankOneUpdateOperator& T) {
  if (T.dim() != P.dim()) throw Error(ErrorCode::DimensionMismatch, "operator and polynomial dimensions differ");
  return P.with_operator(T);
}

}  // namespace wnl

#endif  // WNL_POLYNOMIAL_HPP
