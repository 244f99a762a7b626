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

#include <cstddef>
#include <string>
#include <utility>

#include "wittzeta/algebra/poly.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/motivic/k0.hpp"
#include "wittzeta/motivic/measure.hpp"
#include "wittzeta/verdict.hpp"
#include "wittzeta/witt/rational.hpp"
#include "wittzeta/witt/witt_vector.hpp"

namespace wittzeta {

/// Truncated Kapranov zeta function sum_n mu([S^n X]) t^n with provenance.
template <CommutativeRing R>
struct ZetaSeries {
  WittVector<R> series;
  std::string measure;
  std::string description;

  std::size_t precision() const { return series.precision(); }
};

/// Census measures need a single generator (symmetric powers do not
/// distribute over formal sums); sigma measures accept any class and return
/// sigma_t(mu(c)).
template <MotivicMeasure M>
ZetaSeries<typename M::ring_type> kapranov_zeta(const M& mu, const K0Class& c, std::size_t precision) {
  if constexpr (M::policy == SymPowerPolicy::Census) {
    auto atom = c.single_atom();
    if (!atom) throw UnsupportedClass("zeta of formal combination " + c.describe() + " under a census measure");
    return {mu.census_zeta(*atom, precision), M::name, c.describe()};
  } else {
    return {mu.structure().sigma_t(measure_value(mu, c), precision), M::name, c.describe()};
  }
}

/// zeta(X x Y) = zeta(X) * zeta(Y).
template <MotivicMeasure M>
Verdict check_exponentiation(const M& mu, const K0Class& x, const K0Class& y, std::size_t precision) {
  const auto lhs = kapranov_zeta(mu, x * y, precision).series;
  const auto rhs = witt_mul(kapranov_zeta(mu, x, precision).series, kapranov_zeta(mu, y, precision).series);
  return compare("zeta(XxY) = zeta(X) * zeta(Y)", lhs, rhs);
}

/// zeta(X x A^n; t) = zeta(X; mu(L)^n t), the left side computed on the product class.
template <MotivicMeasure M>
Verdict totaro_check(const M& mu, const K0Class& x, unsigned n, std::size_t precision) {
  using R = typename M::ring_type;
  const auto lhs = kapranov_zeta(mu, x * mu.affine_space(n, x), precision).series;
  const R scale = power(lefschetz_value(mu, x), n);
  const auto rhs = twist(kapranov_zeta(mu, x, precision).series, scale);
  return compare("zeta(X x A^n; t) = zeta(X; mu(L)^n t)", lhs, rhs);
}

/// Each link of
///   zeta(X x A^n) = zeta(X) * zeta(L^n) = zeta(X) * zeta(L)^{*n} = zeta(X) * [mu(L)]^{*n}
///                 = zeta(X) * [mu(L)^n] = zeta(X; mu(L)^n t).
template <MotivicMeasure M>
Report totaro_proof_trace(const M& mu, const K0Class& x, unsigned n, std::size_t precision) {
  using R = typename M::ring_type;
  const auto zx = kapranov_zeta(mu, x, precision).series;
  const auto zxan = kapranov_zeta(mu, x * mu.affine_space(n, x), precision).series;
  const auto zln = kapranov_zeta(mu, mu.affine_space(n, x), precision).series;
  const auto zl = kapranov_zeta(mu, mu.affine_space(1, x), precision).series;
  const R ml = lefschetz_value(mu, x);
  const R mln = power(ml, n);

  const auto step1 = witt_mul(zx, zln);
  const auto step2 = witt_mul(zx, witt_power(zl, n));
  const auto step3 = witt_mul(zx, witt_power(teichmuller(ml, precision), n));
  const auto step4 = witt_mul(zx, teichmuller(mln, precision));
  const auto step5 = twist(zx, mln);

  Report r;
  r.checks.push_back(compare("zeta(X x A^n) = zeta(X) * zeta(L^n)", zxan, step1));
  r.checks.push_back(compare("zeta(X) * zeta(L^n) = zeta(X) * zeta(L)^{*n}", step1, step2));
  r.checks.push_back(compare("zeta(X) * zeta(L)^{*n} = zeta(X) * [mu(L)]^{*n}", step2, step3));
  r.checks.push_back(compare("zeta(X) * [mu(L)]^{*n} = zeta(X) * [mu(L)^n]", step3, step4));
  r.checks.push_back(compare("zeta(X) * [mu(L)^n] = zeta(X; mu(L)^n t)", step4, step5));
  return r;
}

enum class BundleKind { Fiber, Projective };

/// Trivial bundles: zeta(X x A^n) = zeta(X; mu(L)^n t) and
/// zeta(X x P^n) = zeta(X; t) +_W zeta(X; mu(L) t) +_W ... +_W zeta(X; mu(L)^n t).
template <MotivicMeasure M>
Verdict bundle_zeta_check(const M& mu, const K0Class& x, unsigned n, std::size_t precision, BundleKind kind) {
  using R = typename M::ring_type;
  if (kind == BundleKind::Fiber) return totaro_check(mu, x, n, precision);
  const auto lhs = kapranov_zeta(mu, x * mu.projective_space(n, x), precision).series;
  const auto zx = kapranov_zeta(mu, x, precision).series;
  const R ml = lefschetz_value(mu, x);
  auto rhs = WittVector<R>::zero(precision);
  R scale = ring_traits<R>::one();
  for (unsigned i = 0; i <= n; ++i) {
    rhs = witt_add(rhs, twist(zx, scale));
    scale = R(scale * ml);
  }
  return compare("zeta(X x P^n) = sum_W zeta(X; mu(L)^i t)", lhs, rhs);
}

template <CommutativeRing R>
struct ProductRationality {
  RatWitt<R> x;
  RatWitt<R> y;
  RatWitt<R> product;
  Verdict expansion_check;
};

/// Reconstructs zeta(X) and zeta(Y) as rational functions, multiplies them
/// with rat_mul and checks the result against the directly computed zeta(X x Y).
template <MotivicMeasure M>
ProductRationality<typename M::ring_type> product_rationality(const M& mu, const K0Class& x, const K0Class& y,
                                                              std::size_t dmax, std::size_t precision) {
  const auto zx = kapranov_zeta(mu, x, precision).series;
  const auto zy = kapranov_zeta(mu, y, precision).series;
  auto rx = rationalize(zx, dmax);
  if (!rx) throw NotRationalAtBound("zeta(" + x.describe() + ") at dmax " + std::to_string(dmax));
  auto ry = rationalize(zy, dmax);
  if (!ry) throw NotRationalAtBound("zeta(" + y.describe() + ") at dmax " + std::to_string(dmax));
  auto prod = rat_mul(*rx, *ry);
  const auto direct = kapranov_zeta(mu, x * y, precision).series;
  auto verdict = compare("expansion(rat_mul) = zeta(X x Y)", prod.expansion(precision), direct);
  return {std::move(*rx), std::move(*ry), std::move(prod), std::move(verdict)};
}

/// g * (P (1 - s t)^{-1}) = g(s t) +_W (g * P), the Witt-algebra content of the
/// equivariant zeta identity; s and the coefficients of P are symbolic values.
template <TorsionFreeRing R>
Verdict g_witt_identity_check(const WittVector<R>& g, const R& s, const Poly<R>& p, std::size_t precision) {
  const auto n = precision;
  const WittVector<R> p_series(Series<R>::from_poly(p, n));
  const WittVector<R> lhs_factor(p_series.series() * teichmuller(s, n).series());
  const auto lhs = witt_mul(g, lhs_factor);
  const auto rhs = witt_add(twist(g, s), witt_mul(g, p_series));
  return compare("g * (P/(1 - s t)) = g(s t) +_W g * P", lhs, rhs);
}

}  // namespace wittzeta
