#ifndef WNL_IO_HPP
#define WNL_IO_HPP

// JSON encoding of spaces, vectors and polynomials.
//
//   space:      {"n": 4, "p": 2}            p may be the string "inf"
//   complex:    [re, im]
//   vector:     {"space": {...}, "coords": [[re, im], ...]}
//   polynomial: {"space": {...},
//                "components": [{"k": 2, "kind": "diagonal", "coeffs": [...]},
//                               {"k": 3, "kind": "functional_power", "coeffs": [...], "scale": [re, im]},
//                               {"k": 0, "kind": "constant", "coeffs": [[re, im]]}],
//                "chain": [{"a": 0.9, "b": 0.1, "u": [...], "g": [...]}]}
//
// Doubles are written with enough digits to round-trip exactly.

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wnl/error.hpp"
#include "wnl/polynomial.hpp"
#include "wnl/space.hpp"

namespace wnl::io {

using json = nlohmann::json;

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json to_json(std::span<const cplx> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

inline json to_json(const LpSpace& X) {
  json out;
  out["n"] = X.dim();
  if (X.is_infinite())
    out["p"] = "inf";
  else
    out["p"] = X.p();
  return out;
}

inline json to_json(const LpVector& v) { return {{"space", to_json(v.space())}, {"coords", to_json(v.coords())}}; }

inline std::string_view kind_name(HomogeneousComponent::Kind kind) {
  switch (kind) {
    case HomogeneousComponent::Kind::Constant: return "constant";
    case HomogeneousComponent::Kind::Diagonal: return "diagonal";
    case HomogeneousComponent::Kind::FunctionalPower: return "functional_power";
  }
  return "?";
}

inline json to_json(const Polynomial& P) {
  json comps = json::array();
  for (const auto& c : P.components()) {
    json jc{{"k", c.degree()}, {"kind", kind_name(c.kind())}, {"coeffs", to_json(c.coeffs())}};
    if (c.kind() == HomogeneousComponent::Kind::FunctionalPower && c.scale() != cplx{1.0, 0.0})
      jc["scale"] = to_json(c.scale());
    comps.push_back(std::move(jc));
  }
  json chain = json::array();
  for (const auto& op : P.chain())
    chain.push_back({{"a", op.a()}, {"b", op.b()}, {"u", to_json(op.u())}, {"g", to_json(op.g())}});
  return {{"space", to_json(P.space())}, {"components", std::move(comps)}, {"chain", std::move(chain)}};
}

// ---------------------------------------------------------------------------

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline double number(const json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace detail

inline cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    detail::parse_fail("complex numbers are written [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline std::vector<cplx> complex_vector_from_json(const json& j) {
  if (!j.is_array()) detail::parse_fail("expected an array of complex numbers");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

inline LpSpace space_from_json(const json& j) {
  const json& jn = detail::field(j, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) detail::parse_fail("space.n must be a positive integer");
  const json& jp = detail::field(j, "p");
  double p = 0.0;
  if (jp.is_string()) {
    if (jp.get<std::string>() != "inf") detail::parse_fail("space.p must be a number or \"inf\"");
    p = kInfinity;
  } else {
    p = detail::number(jp, "space.p");
  }
  return LpSpace(jn.get<std::size_t>(), p);
}

/// Accepts {"space":..., "coords": [...]} or, given a space, a bare coordinate array.
inline LpVector vector_from_json(const json& j, const LpSpace* space = nullptr) {
  if (j.is_array()) {
    if (!space) detail::parse_fail("a bare coordinate array needs a known space");
    return LpVector(*space, complex_vector_from_json(j));
  }
  auto coords = complex_vector_from_json(detail::field(j, "coords"));
  if (!j.contains("space")) {
    if (!space) detail::parse_fail("vector without a space");
    return LpVector(*space, std::move(coords));
  }
  const LpSpace X = space_from_json(j.at("space"));
  if (space && !(X == *space)) throw Error(ErrorCode::DimensionMismatch, "vector space does not match");
  return LpVector(X, std::move(coords));
}

inline Polynomial polynomial_from_json(const json& j) {
  const LpSpace X = space_from_json(detail::field(j, "space"));
  std::vector<HomogeneousComponent> comps;
  for (const auto& jc : detail::field(j, "components")) {
    const json& jk = detail::field(jc, "k");
    if (!jk.is_number_integer()) detail::parse_fail("component degree must be an integer");
    const int k = jk.get<int>();
    const std::string kind = detail::field(jc, "kind").get<std::string>();
    auto coeffs = complex_vector_from_json(detail::field(jc, "coeffs"));
    if (kind == "constant") {
      if (k != 0 || coeffs.size() != 1) detail::parse_fail("constant component needs k = 0 and one coefficient");
      comps.push_back(HomogeneousComponent::constant(coeffs[0]));
    } else if (kind == "diagonal") {
      comps.push_back(HomogeneousComponent::diagonal(k, std::move(coeffs)));
    } else if (kind == "functional_power") {
      const cplx scale = jc.contains("scale") ? complex_from_json(jc.at("scale")) : cplx{1.0, 0.0};
      comps.push_back(HomogeneousComponent::functional_power(k, std::move(coeffs), scale));
    } else {
      detail::parse_fail("unknown component kind '" + kind + "'");
    }
  }
  std::vector<RankOneUpdateOperator> chain;
  if (j.contains("chain")) {
    for (const auto& jo : j.at("chain"))
      chain.emplace_back(detail::number(detail::field(jo, "a"), "a"), detail::number(detail::field(jo, "b"), "b"),
                         complex_vector_from_json(detail::field(jo, "u")),
                         complex_vector_from_json(detail::field(jo, "g")));
  }
  return Polynomial(X, std::move(comps), std::move(chain));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace wnl::io

#endif  // WNL_IO_HPP
