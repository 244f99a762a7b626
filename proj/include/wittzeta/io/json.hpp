// Copyright 2026 The wittzeta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>
#include "wittzeta/algebra/finite_field.hpp"
#include "wittzeta/algebra/parse.hpp"
#include "wittzeta/algebra/series.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/motivic/k0.hpp"
#include "wittzeta/motivic/variety.hpp"
#include "wittzeta/verdict.hpp"
#include "wittzeta/witt/rational.hpp"
#include "wittzeta/witt/witt_vector.hpp"

namespace wittzeta::io {

using Json = nlohmann::json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

namespace detail {

inline unsigned read_unsigned(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<unsigned>();
}

inline AmbientFactor read_factor(const Json& j) {
  if (!j.is_object()) throw ParseError("ambient factor must be an object");
  AmbientFactor f;
  bool seen = false;
  for (const auto& [kind, akind] : {std::pair{"affine", AmbientKind::Affine}, {"projective", AmbientKind::Projective}}) {
    if (!j.contains(kind)) continue;
    if (seen) throw ParseError("ambient factor names two spaces");
    seen = true;
    f.kind = akind;
    f.dim = read_unsigned(j.at(kind), kind);
  }
  if (!seen) throw ParseError("ambient factor needs \"affine\" or \"projective\"");
  if (j.contains("variables")) f.variables = j.at("variables").get<std::vector<std::string>>();
  return f;
}

}  // namespace detail

/// Reads {"p": 3, "k": 1, "ambient": {"affine": 2}, "equations": ["x^2+y^2-1"]}.
/// "ambient" may also be a list of factors for products, each factor may carry
/// its own "variables", and a top-level "variables" list is split across the
/// factors in order. A field size q overrides "p" and "k".
inline VarietyDesc variety_from_json(const Json& j, std::optional<std::uint64_t> q = std::nullopt) {
  try {
    if (!j.is_object()) throw ParseError("variety must be a JSON object");
    std::uint64_t p = 0;
    unsigned k = 1;
    if (q) {
      auto pk = prime_power(*q);
      if (!pk) throw NotPrime(std::to_string(*q) + " is not a prime power");
      std::tie(p, k) = *pk;
    } else {
      if (!j.contains("p")) throw ParseError("variety needs \"p\" (or a field size q)");
      p = j.at("p").get<std::uint64_t>();
      if (j.contains("k")) k = detail::read_unsigned(j.at("k"), "k");
    }
    if (!j.contains("ambient")) throw ParseError("variety needs \"ambient\"");
    std::vector<AmbientFactor> factors;
    const Json& amb = j.at("ambient");
    if (amb.is_array()) {
      for (const auto& f : amb) factors.push_back(detail::read_factor(f));
    } else {
      factors.push_back(detail::read_factor(amb));
    }
    if (j.contains("variables")) {
      const auto names = j.at("variables").get<std::vector<std::string>>();
      std::size_t pos = 0;
      for (auto& f : factors) {
        const std::size_t n = f.coordinate_count();
        if (pos + n > names.size()) throw InvalidVariety("too few variables for the ambient space");
        f.variables.assign(names.begin() + static_cast<long>(pos), names.begin() + static_cast<long>(pos + n));
        pos += n;
      }
      if (pos != names.size()) throw InvalidVariety("too many variables for the ambient space");
    }
    std::vector<MPoly> equations;
    if (j.contains("equations")) {
      for (const auto& e : j.at("equations")) equations.push_back(parse_polynomial(e.get<std::string>()));
    }
    return VarietyDesc(p, k, std::move(factors), std::move(equations));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed variety: ") + e.what());
  }
}

/// Reads {"name": "C", "values": {"euler": "-2", "poincare": "1 - 4*u + u^2"}}.
inline SymbolicAtom symbolic_atom_from_json(const Json& j) {
  try {
    SymbolicAtom a;
    a.name = j.at("name").get<std::string>();
    if (a.name.empty()) throw ParseError("symbolic atom needs a name");
    for (const auto& [measure, v] : j.at("values").items()) {
      a.values[measure] = v.is_number_integer() ? MPoly(Integer(v.get<long>())) : parse_polynomial(v.get<std::string>());
    }
    return a;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed symbolic atom: ") + e.what());
  }
}

template <CommutativeRing R>
Json to_json(const Series<R>& g) {
  Json coeffs = Json::array();
  for (const auto& c : g.coeffs()) coeffs.push_back(ring_traits<R>::to_string(c));
  return Json{{"precision", g.precision()}, {"coeffs", coeffs}};
}

template <CommutativeRing R>
Json to_json(const WittVector<R>& g) {
  return to_json(g.series());
}

/// {"precision": N, "coeffs": ["1", "3", ...]} with decimal-string integers.
inline Series<Integer> integer_series_from_json(const Json& j) {
  try {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) {
      Integer v;
      const std::string s = c.is_string() ? c.get<std::string>() : c.dump();
      if (v.set_str(s, 10) != 0) throw ParseError("coefficient '" + s + "' is not a decimal integer");
      coeffs.push_back(v);
    }
    if (coeffs.empty()) throw ParseError("series has no coefficients");
    if (j.contains("precision")) {
      const auto n = j.at("precision").get<std::size_t>();
      if (n + 1 != coeffs.size()) throw PrecisionMismatch("precision " + std::to_string(n) + " with " +
                                                          std::to_string(coeffs.size()) + " coefficients");
    }
    return Series<Integer>(std::move(coeffs));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed series: ") + e.what());
  }
}

template <CommutativeRing R>
Json to_json(const RatWitt<R>& f) {
  auto coeffs = [](const Poly<R>& p) {
    Json out = Json::array();
    for (long i = 0; i <= p.degree(); ++i) out.push_back(ring_traits<R>::to_string(p.coeff(static_cast<std::size_t>(i))));
    return out;
  };
  return Json{{"numerator", coeffs(f.numerator())}, {"denominator", coeffs(f.denominator())}, {"text", to_string(f)}};
}

inline Json to_json(const Verdict& v) {
  Json j{{"identity", v.identity}, {"holds", v.holds}, {"precision", v.precision}, {"text", v.to_string()}};
  if (!v.holds) {
    j["first_difference"] = v.first_difference.value_or(0);
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
  }
  return j;
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& v : r.checks) checks.push_back(to_json(v));
  return Json{{"holds", r.holds()}, {"text", r.to_string()}, {"checks", checks}};
}

}  // namespace wittzeta::io
