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
#include <string>
#include <utility>
#include <vector>

#include "wittzeta/algebra/poly.hpp"
#include "wittzeta/algebra/ring.hpp"
#include "wittzeta/errors.hpp"

namespace wittzeta {

/// Power series truncated at t^N: exactly N+1 stored coefficients c_0..c_N.
/// Binary operations require equal precision.
template <CommutativeRing R>
class Series {
 public:
  using coefficient_type = R;

  explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PrecisionMismatch("a series needs at least the constant coefficient");
  }

  static Series constant(const R& c, std::size_t precision) {
    std::vector<R> v(precision + 1, ring_traits<R>::zero());
    v[0] = c;
    return Series(std::move(v));
  }
  static Series one(std::size_t precision) { return constant(ring_traits<R>::one(), precision); }
  static Series from_poly(const Poly<R>& p, std::size_t precision) {
    std::vector<R> v(precision + 1, ring_traits<R>::zero());
    for (std::size_t i = 0; i < v.size() && i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
    return Series(std::move(v));
  }

  std::size_t precision() const { return coeffs_.size() - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& operator[](std::size_t i) const { return coeffs_[i]; }

  /// Polynomial of the stored coefficients.
  Poly<R> to_poly() const { return Poly<R>(coeffs_); }

  Series operator-() const {
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(R(-c));
    return Series(std::move(v));
  }
  friend Series operator+(const Series& a, const Series& b) {
    check_same_precision(a, b);
    std::vector<R> v;
    v.reserve(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v.push_back(R(a.coeffs_[i] + b.coeffs_[i]));
    return Series(std::move(v));
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    check_same_precision(a, b);
    const std::size_t n = a.coeffs_.size();
    std::vector<R> v(n, ring_traits<R>::zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (ring_traits<R>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) v[i + j] = R(v[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return Series(std::move(v));
  }
  friend bool operator==(const Series& a, const Series& b) {
    check_same_precision(a, b);
    return a.coeffs_ == b.coeffs_;
  }

  static void check_same_precision(const Series& a, const Series& b) {
    if (a.precision() != b.precision()) {
      throw PrecisionMismatch("precisions " + std::to_string(a.precision()) + " and " +
                              std::to_string(b.precision()));
    }
  }

 private:
  std::vector<R> coeffs_;
};

/// Multiplicative inverse; the constant term must be a unit.
template <CommutativeRing R>
Series<R> series_invert(const Series<R>& g) {
  auto inv0 = ring_traits<R>::unit_inverse(g[0]);
  if (!inv0) throw NonUnitConstantTerm("constant term " + ring_traits<R>::to_string(g[0]) + " is not a unit");
  const std::size_t n = g.precision() + 1;
  std::vector<R> h(n, ring_traits<R>::zero());
  h[0] = *inv0;
  for (std::size_t k = 1; k < n; ++k) {
    R acc = ring_traits<R>::zero();
    for (std::size_t i = 1; i <= k; ++i) acc = R(acc + g[i] * h[k - i]);
    h[k] = R(-(acc * *inv0));
  }
  return Series<R>(std::move(h));
}

/// g^e for any integer exponent; negative exponents invert first.
template <CommutativeRing R>
Series<R> series_power(const Series<R>& g, long exponent) {
  Series<R> base = exponent < 0 ? series_invert(g) : g;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Series<R> result = Series<R>::one(g.precision());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// g(a*t).
template <CommutativeRing R>
Series<R> substitute_scaled(const Series<R>& g, const R& a) {
  std::vector<R> v;
  v.reserve(g.coeffs().size());
  R scale = ring_traits<R>::one();
  for (const auto& c : g.coeffs()) {
    v.push_back(R(c * scale));
    scale = R(scale * a);
  }
  return Series<R>(std::move(v));
}

/// g(-t).
template <CommutativeRing R>
Series<R> negate_variable(const Series<R>& g) {
  std::vector<R> v = g.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = R(-v[i]);
  return Series<R>(std::move(v));
}

template <CommutativeRing R>
Series<R> truncate(const Series<R>& g, std::size_t precision) {
  if (precision > g.precision()) throw PrecisionMismatch("cannot extend a truncated series");
  return Series<R>(std::vector<R>(g.coeffs().begin(), g.coeffs().begin() + static_cast<std::ptrdiff_t>(precision + 1)));
}

/// Index of the first differing coefficient, if any.
template <CommutativeRing R>
std::optional<std::size_t> first_difference(const Series<R>& a, const Series<R>& b) {
  Series<R>::check_same_precision(a, b);
  for (std::size_t i = 0; i <= a.precision(); ++i) {
    if (!(a[i] == b[i])) return i;
  }
  return std::nullopt;
}

/// Coefficients C(m+n-1, n), n = 0..N, of (1 - t)^{-m}, for any integer m.
/// For negative m these are the (finite) coefficients of (1 - t)^{|m|}.
inline std::vector<Integer> negative_binomial_coefficients(const Integer& m, std::size_t precision) {
  std::vector<Integer> c(precision + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= precision; ++n) {
    Integer num = c[n - 1] * (m + Integer(static_cast<unsigned long>(n - 1)));
    mpz_divexact_ui(c[n].get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return c;
}

/// "1 + 3*t + 9*t^2 + O(t^3)".
template <CommutativeRing R>
std::string to_string(const Series<R>& g, const std::string& var = "t") {
  std::string out = to_string(Poly<R>(g.coeffs()), var);
  const std::size_t next = g.precision() + 1;
  return out + " + O(" + var + (next == 1 ? "" : "^" + std::to_string(next)) + ")";
}

}  // namespace wittzeta
