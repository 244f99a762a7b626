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
#include <cstddef>
#include <string>
#include <vector>

#include "wittzeta/algebra/poly.hpp"
#include "wittzeta/algebra/series.hpp"
#include "wittzeta/verdict.hpp"
#include "wittzeta/witt/witt_vector.hpp"

namespace wittzeta {

/// A family of operations sigma^n on a ring, packaged as sigma_t: R -> W(R).
template <class S>
concept SigmaStructure = requires(const S& s, const typename S::ring_type& a, std::size_t n) {
  requires TorsionFreeRing<typename S::ring_type>;
  { s.sigma_t(a, n) } -> std::same_as<WittVector<typename S::ring_type>>;
  { s.sigma_n(a, n) } -> std::same_as<typename S::ring_type>;
  { S::name } -> std::convertible_to<std::string>;
};


/// sigma_t(m) = (1 - t)^{-m} on Z: the structure behind the Euler
/// characteristic zeta function.
struct BinomialStructure {
  using ring_type = Integer;
  static constexpr const char* name = "binomial";

  WittVector<Integer> sigma_t(const Integer& m, std::size_t precision) const {
    return WittVector<Integer>(negative_binomial_coefficients(m, precision));
  }
  Integer sigma_n(const Integer& m, std::size_t n) const { return negative_binomial_coefficients(m, n)[n]; }
};

/// sigma_t(sum_r c_r u^r) = prod_r (1 - u^r t)^{-c_r} on Z[u].
struct PlethysticStructure {
  using ring_type = IntPoly;
  static constexpr const char* name = "plethystic";

  WittVector<IntPoly> sigma_t(const IntPoly& f, std::size_t precision) const {
    Series<IntPoly> acc = Series<IntPoly>::one(precision);
    for (std::size_t r = 0; r < f.coeffs().size(); ++r) {
      if (sgn(f.coeffs()[r]) == 0) continue;
      const auto row = negative_binomial_coefficients(f.coeffs()[r], precision);
      std::vector<IntPoly> factor;
      factor.reserve(precision + 1);
      for (std::size_t n = 0; n <= precision; ++n) factor.push_back(IntPoly::monomial(row[n], r * n));
      acc = acc * Series<IntPoly>(std::move(factor));
    }
    return WittVector<IntPoly>(std::move(acc));
  }
  IntPoly sigma_n(const IntPoly& f, std::size_t n) const { return sigma_t(f, n)[n]; }
};

template <SigmaStructure S>
WittVector<typename S::ring_type> sigma_t(const S& s, const typename S::ring_type& a, std::size_t precision) {
  return s.sigma_t(a, precision);
}

/// lambda_t(a) = sigma_{-t}(a)^{-1}; coefficient of t^n is lambda^n(a).
template <SigmaStructure S>
WittVector<typename S::ring_type> lambda_t(const S& s, const typename S::ring_type& a, std::size_t precision) {
  return lambda_involution(s.sigma_t(a, precision));
}

/// lambda^0 = 1, lambda^1 = id and lambda_t(a + b) = lambda_t(a) lambda_t(b).
template <SigmaStructure S>
Report check_lambda_additivity(const S& s, const typename S::ring_type& a, const typename S::ring_type& b,
                               std::size_t precision) {
  using R = typename S::ring_type;
  Report report;
  const auto la = lambda_t(s, a, precision);
  const auto lb = lambda_t(s, b, precision);
  report.checks.push_back(compare_coefficient<R>("lambda^0(a) = 1", 0, la[0], ring_traits<R>::one(), precision));
  if (precision >= 1) report.checks.push_back(compare_coefficient<R>("lambda^1(a) = a", 1, la[1], a, precision));
  report.checks.push_back(compare("lambda_t(a+b) = lambda_t(a) lambda_t(b)", lambda_t(s, R(a + b), precision).series(),
                                  la.series() * lb.series()));
  return report;
}

/// sigma_t is additive into (W(R), +_W) and multiplicative into (W(R), *).
template <SigmaStructure S>
Report check_sigma_ring_hom(const S& s, const typename S::ring_type& a, const typename S::ring_type& b,
                            std::size_t precision) {
  using R = typename S::ring_type;
  Report report;
  const auto sa = s.sigma_t(a, precision);
  const auto sb = s.sigma_t(b, precision);
  report.checks.push_back(compare("sigma_t(a+b) = sigma_t(a) +_W sigma_t(b)", s.sigma_t(R(a + b), precision),
                                  witt_add(sa, sb)));
  report.checks.push_back(compare("sigma_t(ab) = sigma_t(a) * sigma_t(b)", s.sigma_t(R(a * b), precision),
                                  witt_mul(sa, sb)));
  return report;
}

}  // namespace wittzeta
