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
#include <optional>
#include <utility>
#include <vector>

#include "wittzeta/algebra/poly.hpp"
#include "wittzeta/algebra/ring.hpp"
#include "wittzeta/errors.hpp"

namespace wittzeta {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every intermediate division is exact in an integral domain.
template <IntegralDomain R>
R determinant(Matrix<R> m) {
  using T = ring_traits<R>;
  const std::size_t n = m.size();
  if (n == 0) return T::one();
  bool negate = false;
  R prev = T::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (T::is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && T::is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return T::zero();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = R(m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        auto q = T::divide_exact(num, prev);
        if (!q) throw NonIntegral("Bareiss step is not exact; coefficient ring is not an integral domain");
        m[i][j] = std::move(*q);
      }
      m[i][k] = T::zero();
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R(-det) : det;
}

/// Sylvester matrix of f and g taken at declared degrees (df, dg), which
/// may exceed the actual degrees. Rows of f come first; coefficients run
/// from the highest declared power down.
template <CommutativeRing R>
Matrix<R> sylvester_matrix(const Poly<R>& f, const Poly<R>& g, std::size_t df, std::size_t dg) {
  const std::size_t n = df + dg;
  Matrix<R> m(n, std::vector<R>(n, ring_traits<R>::zero()));
  for (std::size_t row = 0; row < dg; ++row) {
    for (std::size_t i = 0; i <= df; ++i) m[row][row + i] = f.coeff(df - i);
  }
  for (std::size_t row = 0; row < df; ++row) {
    for (std::size_t i = 0; i <= dg; ++i) m[dg + row][row + i] = g.coeff(dg - i);
  }
  return m;
}

/// Resultant at declared degrees (defaults: the actual degrees).
template <IntegralDomain R>
R resultant(const Poly<R>& f, const Poly<R>& g, std::optional<std::size_t> df = std::nullopt,
            std::optional<std::size_t> dg = std::nullopt) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of a zero polynomial");
  const std::size_t m = df.value_or(static_cast<std::size_t>(f.degree()));
  const std::size_t n = dg.value_or(static_cast<std::size_t>(g.degree()));
  if (m < static_cast<std::size_t>(f.degree()) || n < static_cast<std::size_t>(g.degree())) {
    throw ZeroPolynomial("declared degree below actual degree");
  }
  return determinant(sylvester_matrix(f, g, m, n));
}

}  // namespace wittzeta
