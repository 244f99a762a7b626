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
#include <vector>

#include "wittzeta/algebra/ring.hpp"
#include "wittzeta/algebra/series.hpp"
#include "wittzeta/errors.hpp"

namespace wittzeta {

/// Truncated element of the big Witt ring W(R): a series 1 + c_1 t + ... + c_N t^N.
/// Addition in W(R) is series multiplication, so the additive zero is the
/// constant series 1 and the multiplicative unit is (1 - t)^{-1}.
template <CommutativeRing R>
class WittVector {
 public:
  using coefficient_type = R;

  explicit WittVector(Series<R> s) : series_(std::move(s)) {
    if (!(series_[0] == ring_traits<R>::one())) {
      throw NonUnitConstantTerm("Witt vectors have constant term 1, got " + ring_traits<R>::to_string(series_[0]));
    }
  }
  explicit WittVector(std::vector<R> coeffs) : WittVector(Series<R>(std::move(coeffs))) {}

  static WittVector zero(std::size_t precision) { return WittVector(Series<R>::one(precision)); }
  static WittVector unit(std::size_t precision) {
    return WittVector(std::vector<R>(precision + 1, ring_traits<R>::one()));
  }

  const Series<R>& series() const { return series_; }
  std::size_t precision() const { return series_.precision(); }
  const R& operator[](std::size_t i) const { return series_[i]; }

  friend bool operator==(const WittVector& a, const WittVector& b) { return a.series_ == b.series_; }

 private:
  Series<R> series_;
};

/// Power-sum (ghost) coordinates p_1..p_N; turns +_W into pointwise sum and
/// the Witt product into pointwise product.
template <CommutativeRing R>
struct GhostVector {
  std::vector<R> components;  // components[n - 1] = p_n

  std::size_t precision() const { return components.size(); }
  const R& operator[](std::size_t n) const { return components[n - 1]; }

  friend GhostVector operator+(const GhostVector& a, const GhostVector& b) {
    check(a, b);
    GhostVector out;
    for (std::size_t i = 0; i < a.components.size(); ++i) out.components.push_back(R(a.components[i] + b.components[i]));
    return out;
  }
  friend GhostVector operator*(const GhostVector& a, const GhostVector& b) {
    check(a, b);
    GhostVector out;
    for (std::size_t i = 0; i < a.components.size(); ++i) out.components.push_back(R(a.components[i] * b.components[i]));
    return out;
  }
  friend bool operator==(const GhostVector& a, const GhostVector& b) { return a.components == b.components; }

 private:
  static void check(const GhostVector& a, const GhostVector& b) {
    if (a.components.size() != b.components.size()) throw PrecisionMismatch("ghost vectors of different length");
  }
};

template <CommutativeRing R>
WittVector<R> witt_add(const WittVector<R>& g, const WittVector<R>& h) {
  return WittVector<R>(g.series() * h.series());
}

template <CommutativeRing R>
WittVector<R> witt_neg(const WittVector<R>& g) {
  return WittVector<R>(series_invert(g.series()));
}

template <CommutativeRing R>
WittVector<R> witt_sub(const WittVector<R>& g, const WittVector<R>& h) {
  return witt_add(g, witt_neg(h));
}

/// Newton's identities: p_n = n c_n - sum_{i<n} c_{n-i} p_i. Coefficients of t d/dt log g.
template <CommutativeRing R>
GhostVector<R> ghost(const WittVector<R>& g) {
  const std::size_t n_max = g.precision();
  GhostVector<R> out;
  out.components.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    R acc = R(g[n] * ring_traits<R>::from_int(static_cast<long>(n)));
    for (std::size_t i = 1; i < n; ++i) acc = R(acc - g[n - i] * out.components[i - 1]);
    out.components.push_back(std::move(acc));
  }
  return out;
}

/// Inverse of the ghost map on a torsion-free ring: c_n = (p_n + sum_{i<n} c_{n-i} p_i) / n.
/// Throws NonIntegral when some c_n falls outside R.
template <TorsionFreeRing R>
WittVector<R> from_ghost(const GhostVector<R>& ps) {
  const std::size_t n_max = ps.precision();
  std::vector<R> c(n_max + 1, ring_traits<R>::zero());
  c[0] = ring_traits<R>::one();
  for (std::size_t n = 1; n <= n_max; ++n) {
    R acc = ps[n];
    for (std::size_t i = 1; i < n; ++i) acc = R(acc + c[n - i] * ps[i]);
    auto q = ring_traits<R>::divide_by_integer(acc, Integer(static_cast<unsigned long>(n)));
    if (!q) {
      throw NonIntegral("coefficient of t^" + std::to_string(n) + " is " + ring_traits<R>::to_string(acc) + "/" +
                        std::to_string(n));
    }
    c[n] = std::move(*q);
  }
  return WittVector<R>(std::move(c));
}

/// Witt product, computed through ghost coordinates. Only torsion-free
/// coefficient rings are supported.
template <CommutativeRing R>
WittVector<R> witt_mul(const WittVector<R>& g, const WittVector<R>& h) {
  if constexpr (!ring_traits<R>::torsion_free) {
    throw TorsionUnsupported(std::string("Witt product over ") + ring_traits<R>::name);
  } else {
    if (g.precision() != h.precision()) {
      throw PrecisionMismatch("precisions " + std::to_string(g.precision()) + " and " +
                              std::to_string(h.precision()));
    }
    return from_ghost(ghost(g) * ghost(h));
  }
}

/// n-fold Witt product; the empty product is the unit (1 - t)^{-1}.
template <CommutativeRing R>
WittVector<R> witt_power(const WittVector<R>& g, unsigned n) {
  WittVector<R> out = WittVector<R>::unit(g.precision());
  for (unsigned i = 0; i < n; ++i) out = witt_mul(out, g);
  return out;
}

/// Teichmüller class [a] = (1 - a t)^{-1}.
template <CommutativeRing R>
WittVector<R> teichmuller(const R& a, std::size_t precision) {
  std::vector<R> c;
  c.reserve(precision + 1);
  R p = ring_traits<R>::one();
  for (std::size_t n = 0; n <= precision; ++n) {
    c.push_back(p);
    p = R(p * a);
  }
  return WittVector<R>(std::move(c));
}

/// g(a t), which equals g * [a].
template <CommutativeRing R>
WittVector<R> twist(const WittVector<R>& g, const R& a) {
  return WittVector<R>(substitute_scaled(g.series(), a));
}

/// The involution Λ(R) -> W(R), g(t) -> g(-t)^{-1}.
template <CommutativeRing R>
WittVector<R> lambda_involution(const WittVector<R>& g) {
  return WittVector<R>(series_invert(negate_variable(g.series())));
}

template <CommutativeRing R>
std::string to_string(const WittVector<R>& g) {
  return to_string(g.series());
}

}  // namespace wittzeta
