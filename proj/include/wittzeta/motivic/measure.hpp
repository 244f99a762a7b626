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

#include <concepts>
#include <string>
#include <utility>

#include "wittzeta/algebra/mpoly.hpp"
#include "wittzeta/algebra/poly.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/lambda/sigma.hpp"
#include "wittzeta/motivic/k0.hpp"
#include "wittzeta/motivic/point_count.hpp"
#include "wittzeta/witt/witt_vector.hpp"

namespace wittzeta {

/// How a measure evaluates symmetric powers: by counting effective
/// zero-cycles of an actual variety, or through a sigma-structure on its
/// target ring (mu([S^n X]) = sigma^n(mu([X]))).
enum class SymPowerPolicy { Census, Sigma };

/// A ring homomorphism K0 -> R, evaluated atom by atom.
template <class M>
concept MotivicMeasure = requires(const M& m, const Atom& a, const K0Class& c, unsigned n) {
  requires CommutativeRing<typename M::ring_type>;
  { m.value(a) } -> std::same_as<typename M::ring_type>;
  { m.affine_space(n, c) } -> std::same_as<K0Class>;
  { m.projective_space(n, c) } -> std::same_as<K0Class>;
  { M::name } -> std::convertible_to<std::string>;
  { M::policy } -> std::convertible_to<SymPowerPolicy>;
};

/// mu(sum m_i [A_i]) = sum m_i mu([A_i]).
template <MotivicMeasure M>
typename M::ring_type measure_value(const M& mu, const K0Class& c) {
  using R = typename M::ring_type;
  R acc = ring_traits<R>::zero();
  for (const auto& [m, atom] : c.terms()) acc = R(acc + mu.value(*atom) * ring_traits<R>::from_int(m.get_si()));
  return acc;
}

namespace detail {

/// Symbolic Lefschetz class L = [A^1] with its Euler and Poincaré values.
inline SymbolicAtom lefschetz_atom() {
  return SymbolicAtom{"L", {{"euler", MPoly(1)}, {"poincare", MPoly::variable("u") * MPoly::variable("u")}}};
}

inline K0Class symbolic_affine_space(unsigned n) {
  K0Class out = K0Class::point();
  for (unsigned i = 0; i < n; ++i) out = out * K0Class(Atom(lefschetz_atom()));
  return out;
}

/// [P^n] = 1 + L + ... + L^n.
inline K0Class symbolic_projective_space(unsigned n) {
  K0Class out;
  for (unsigned i = 0; i <= n; ++i) out = out + symbolic_affine_space(i);
  return out;
}

inline const MPoly& symbolic_value(const Atom& a, const std::string& measure) {
  const auto* s = a.symbolic();
  auto it = s->values.find(measure);
  if (it == s->values.end()) throw UnvaluedAtom("no " + measure + " value for " + a.describe());
  return it->second;
}

}  // namespace detail

/// The counting measure [X] -> #X(F_q), with symmetric powers counted as
/// effective zero-cycles.
class CountingMeasure {
 public:
  using ring_type = Integer;
  static constexpr const char* name = "counting";
  static constexpr SymPowerPolicy policy = SymPowerPolicy::Census;

  explicit CountingMeasure(CountOptions options = {}) : options_(options) {}

  const CountOptions& options() const { return options_; }

  Integer value(const Atom& a) const {
    if (a.is_point()) return Integer(1);
    if (const auto* v = a.variety()) return count_points(*v, 1, options_);
    auto c = detail::symbolic_value(a, name).as_constant();
    if (!c) throw UnvaluedAtom("counting value of " + a.describe() + " is not an integer");
    return *c;
  }

  /// Truncated Weil zeta function of a single generator.
  WittVector<Integer> census_zeta(const Atom& a, std::size_t precision) const {
    if (a.is_point()) return WittVector<Integer>::unit(precision);
    if (const auto* v = a.variety()) return weil_zeta(*v, precision, options_);
    throw UnsupportedClass("symmetric powers of symbolic class " + a.describe() + " cannot be counted");
  }

  K0Class affine_space(unsigned n, const K0Class& like) const {
    const auto [p, k] = base_field(like);
    return K0Class(Atom(VarietyDesc::affine(p, k, n)));
  }
  K0Class projective_space(unsigned n, const K0Class& like) const {
    const auto [p, k] = base_field(like);
    return K0Class(Atom(VarietyDesc::projective(p, k, n)));
  }

 private:
  static std::pair<std::uint64_t, unsigned> base_field(const K0Class& like) {
    for (const auto& [m, atom] : like.terms()) {
      if (const auto* v = atom->variety()) return {v->characteristic(), v->field_degree()};
    }
    throw UnsupportedClass("the counting measure needs a variety to fix the base field");
  }

  CountOptions options_;
};

/// Compactly supported Euler characteristic, through the binomial sigma-structure.
class EulerMeasure {
 public:
  using ring_type = Integer;
  using structure_type = BinomialStructure;
  static constexpr const char* name = "euler";
  static constexpr SymPowerPolicy policy = SymPowerPolicy::Sigma;

  Integer value(const Atom& a) const {
    if (a.is_point()) return Integer(1);
    if (a.variety()) throw UnvaluedAtom("euler measure of an equation-defined variety");
    auto c = detail::symbolic_value(a, name).as_constant();
    if (!c) throw UnvaluedAtom("euler value of " + a.describe() + " is not an integer");
    return *c;
  }
  const BinomialStructure& structure() const { return structure_; }
  K0Class affine_space(unsigned n, const K0Class&) const { return detail::symbolic_affine_space(n); }
  K0Class projective_space(unsigned n, const K0Class&) const { return detail::symbolic_projective_space(n); }

 private:
  BinomialStructure structure_;
};

/// Virtual Poincaré polynomial in Z[u], through the plethystic sigma-structure.
class PoincareMeasure {
 public:
  using ring_type = IntPoly;
  using structure_type = PlethysticStructure;
  static constexpr const char* name = "poincare";
  static constexpr SymPowerPolicy policy = SymPowerPolicy::Sigma;

  IntPoly value(const Atom& a) const {
    if (a.is_point()) return IntPoly::one();
    if (a.variety()) throw UnvaluedAtom("poincare measure of an equation-defined variety");
    auto p = detail::symbolic_value(a, name).as_univariate("u");
    if (!p) throw UnvaluedAtom("poincare value of " + a.describe() + " is not a polynomial in u");
    return *p;
  }
  const PlethysticStructure& structure() const { return structure_; }
  K0Class affine_space(unsigned n, const K0Class&) const { return detail::symbolic_affine_space(n); }
  K0Class projective_space(unsigned n, const K0Class&) const { return detail::symbolic_projective_space(n); }

 private:
  PlethysticStructure structure_;
};

/// mu(L), the value of the affine line.
template <MotivicMeasure M>
typename M::ring_type lefschetz_value(const M& mu, const K0Class& like) {
  return measure_value(mu, mu.affine_space(1, like));
}

}  // namespace wittzeta
