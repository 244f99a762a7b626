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

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wittzeta/algebra/finite_field.hpp"
#include "wittzeta/algebra/mpoly.hpp"
#include "wittzeta/errors.hpp"

namespace wittzeta {

enum class AmbientKind { Affine, Projective };

/// One factor of the ambient space: affine n-space (n coordinates) or
/// projective n-space (n + 1 homogeneous coordinates).
struct AmbientFactor {
  AmbientKind kind = AmbientKind::Affine;
  unsigned dim = 0;
  std::vector<std::string> variables;

  std::size_t coordinate_count() const { return kind == AmbientKind::Affine ? dim : dim + 1; }

  friend bool operator==(const AmbientFactor&, const AmbientFactor&) = default;
};

/// Conventional coordinate names: x, y, z for up to three coordinates,
/// x0, x1, ... beyond that.
inline std::vector<std::string> default_variables(std::size_t count) {
  std::vector<std::string> out;
  if (count <= 3) {
    const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(names[i]);
  } else {
    for (std::size_t i = 0; i < count; ++i) out.push_back("x" + std::to_string(i));
  }
  return out;
}

/// A variety over F_{p^k} given by integer polynomial equations inside a
/// product of affine and projective spaces. Only its F_{p^{km}}-points are
/// modeled. Equations are reduced mod p; equations that vanish mod p are dropped.
class VarietyDesc {
 public:
  VarietyDesc(std::uint64_t p, unsigned k, std::vector<AmbientFactor> factors, std::vector<MPoly> equations)
      : p_(p), k_(k), factors_(std::move(factors)) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (k == 0) throw DegreeZero("field degree must be at least 1");
    std::set<std::string> seen;
    std::vector<AmbientFactor> kept;
    for (auto& f : factors_) {
      if (f.variables.empty() && f.coordinate_count() > 0) f.variables = default_variables(f.coordinate_count());
      if (f.variables.size() != f.coordinate_count()) {
        throw InvalidVariety("factor of dimension " + std::to_string(f.dim) + " needs " +
                             std::to_string(f.coordinate_count()) + " variables");
      }
      for (const auto& v : f.variables) {
        if (!seen.insert(v).second) throw InvalidVariety("variable '" + v + "' declared twice");
      }
      if (f.kind == AmbientKind::Affine && f.dim == 0) continue;
      kept.push_back(std::move(f));
    }
    factors_ = std::move(kept);
    for (auto& eq : equations) {
      MPoly r = reduce_mod(eq, p);
      if (r.is_zero()) continue;
      for (const auto& v : r.variables()) {
        if (!seen.count(v)) throw InvalidVariety("equation uses undeclared variable '" + v + "'");
      }
      for (const auto& f : factors_) {
        if (f.kind == AmbientKind::Projective && !r.is_homogeneous_in(f.variables)) {
          throw InvalidVariety("equation " + r.to_string() + " is not homogeneous in the projective coordinates");
        }
      }
      equations_.push_back(std::move(r));
    }
  }

  static VarietyDesc affine(std::uint64_t p, unsigned k, unsigned n, std::vector<MPoly> equations = {},
                            std::vector<std::string> variables = {}) {
    return VarietyDesc(p, k, {{AmbientKind::Affine, n, std::move(variables)}}, std::move(equations));
  }
  static VarietyDesc projective(std::uint64_t p, unsigned k, unsigned n, std::vector<MPoly> equations = {},
                                std::vector<std::string> variables = {}) {
    return VarietyDesc(p, k, {{AmbientKind::Projective, n, std::move(variables)}}, std::move(equations));
  }
  /// Spec(F_q) as affine 0-space.
  static VarietyDesc point(std::uint64_t p, unsigned k) { return affine(p, k, 0); }

  std::uint64_t characteristic() const { return p_; }
  unsigned field_degree() const { return k_; }
  /// q = p^k as an exact integer.
  Integer field_size() const {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, k_);
    return q;
  }
  const std::vector<AmbientFactor>& factors() const { return factors_; }
  const std::vector<MPoly>& equations() const { return equations_; }

  unsigned ambient_dimension() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.dim;
    return d;
  }

  /// Stable textual identity used to collect like terms in K0 combinations.
  std::string key() const {
    std::string s = "F" + std::to_string(p_) + "^" + std::to_string(k_) + ":";
    for (const auto& f : factors_) {
      s += (f.kind == AmbientKind::Affine ? "A" : "P") + std::to_string(f.dim) + "(";
      for (const auto& v : f.variables) s += v + ",";
      s += ")";
    }
    std::vector<std::string> eqs;
    for (const auto& e : equations_) eqs.push_back(e.to_string());
    std::sort(eqs.begin(), eqs.end());
    for (const auto& e : eqs) s += "|" + e;
    return s;
  }

  /// Cartesian product: disjoint union of coordinates, concatenated equations.
  /// Coordinates of `b` that collide with names in `a` get a numeric suffix.
  friend VarietyDesc product(const VarietyDesc& a, const VarietyDesc& b) {
    if (a.p_ != b.p_ || a.k_ != b.k_) throw InvalidVariety("product of varieties over different fields");
    std::set<std::string> used;
    for (const auto& f : a.factors_) used.insert(f.variables.begin(), f.variables.end());
    std::set<std::string> b_names;
    for (const auto& f : b.factors_) b_names.insert(f.variables.begin(), f.variables.end());
    std::map<std::string, std::string> rename;
    for (const auto& f : b.factors_) {
      for (const auto& v : f.variables) {
        if (!used.count(v)) {
          used.insert(v);
          continue;
        }
        for (int i = 2;; ++i) {
          std::string cand = v + std::to_string(i);
          if (!used.count(cand) && !b_names.count(cand)) {
            rename[v] = cand;
            used.insert(cand);
            break;
          }
        }
      }
    }
    std::vector<AmbientFactor> factors = a.factors_;
    for (auto f : b.factors_) {
      for (auto& v : f.variables) {
        if (auto it = rename.find(v); it != rename.end()) v = it->second;
      }
      factors.push_back(std::move(f));
    }
    std::vector<MPoly> eqs = a.equations_;
    for (const auto& e : b.equations_) eqs.push_back(rename.empty() ? e : e.renamed(rename));
    return VarietyDesc(a.p_, a.k_, std::move(factors), std::move(eqs));
  }

 private:
  static MPoly reduce_mod(const MPoly& e, std::uint64_t p) {
    MPoly out;
    const Integer modulus(static_cast<unsigned long>(p));
    for (const auto& [exps, c] : e.terms()) {
      Integer r = c % modulus;
      if (sgn(r) < 0) r += modulus;
      if (sgn(r) == 0) continue;
      MPoly term(r);
      for (std::size_t i = 0; i < exps.size(); ++i) {
        const MPoly v = MPoly::variable(e.variables()[i]);
        for (std::uint32_t j = 0; j < exps[i]; ++j) term = term * v;
      }
      out += term;
    }
    return out;
  }

  std::uint64_t p_;
  unsigned k_;
  std::vector<AmbientFactor> factors_;
  std::vector<MPoly> equations_;
};

}  // namespace wittzeta
