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
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittzeta/algebra/ring.hpp"

namespace wittzeta {

/// Dense univariate polynomial over a commutative ring. Trailing zeros are
/// always stripped, so the zero polynomial has no coefficients and two equal
/// polynomials have identical coefficient vectors.
template <CommutativeRing R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { normalize(); }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}); }
  static Poly monomial(const R& c, std::size_t degree) {
    std::vector<R> v(degree + 1, ring_traits<R>::zero());
    v[degree] = c;
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(ring_traits<R>::one(), 1); }
  static Poly one() { return constant(ring_traits<R>::one()); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  R coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ring_traits<R>::zero();
  }
  R leading() const { return coeffs_.empty() ? ring_traits<R>::zero() : coeffs_.back(); }

  R operator()(const R& x) const {
    R acc = ring_traits<R>::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = R(acc * x + *it);
    return acc;
  }

  Poly operator-() const {
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(R(-c));
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<R>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = R(coeffs_[i] + o.coeffs_[i]);
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<R>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = R(coeffs_[i] - o.coeffs_[i]);
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, ring_traits<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (ring_traits<R>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = R(v[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly scaled(const R& c) const {
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(R(x * c));
    return Poly(std::move(v));
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && ring_traits<R>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

/// p(a*t): coefficient i is multiplied by a^i.
template <CommutativeRing R>
Poly<R> substitute_scaled(const Poly<R>& p, const R& a) {
  std::vector<R> v;
  v.reserve(p.coeffs().size());
  R scale = ring_traits<R>::one();
  for (const auto& c : p.coeffs()) {
    v.push_back(R(c * scale));
    scale = R(scale * a);
  }
  return Poly<R>(std::move(v));
}

/// x^d * p(1/x) for d >= deg p.
template <CommutativeRing R>
Poly<R> reversed(const Poly<R>& p, std::size_t d) {
  std::vector<R> v(d + 1, ring_traits<R>::zero());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[d - i] = p.coeffs()[i];
  return Poly<R>(std::move(v));
}

/// Quotient a / b when b divides a exactly (over an integral domain).
template <IntegralDomain R>
std::optional<Poly<R>> divide_exact(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly<R>();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<R> rem = a.coeffs();
  std::vector<R> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), ring_traits<R>::zero());
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const R& top = rem[k + db];
    if (ring_traits<R>::is_zero(top)) continue;
    auto q = ring_traits<R>::divide_exact(top, b.leading());
    if (!q) return std::nullopt;
    quot[k] = *q;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = R(rem[k + j] - *q * b.coeffs()[j]);
  }
  for (const auto& r : rem) {
    if (!ring_traits<R>::is_zero(r)) return std::nullopt;
  }
  return Poly<R>(std::move(quot));
}

/// gcd of the coefficients, non-negative.
inline Integer content(const Poly<Integer>& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

inline Poly<Integer> primitive_part(const Poly<Integer>& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) v.push_back(Integer(x / c));
  return Poly<Integer>(std::move(v));
}

/// Remainder of a modulo b over a field.
template <CommutativeRing F>
  requires ring_traits<F>::is_field
Poly<F> remainder(const Poly<F>& a, const Poly<F>& b) {
  std::vector<F> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const F inv = *ring_traits<F>::unit_inverse(b.leading());
  while (rem.size() > db && !rem.empty()) {
    F q = F(rem.back() * inv);
    const std::size_t shift = rem.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = F(rem[shift + j] - q * b.coeffs()[j]);
    rem.pop_back();
    while (!rem.empty() && ring_traits<F>::is_zero(rem.back())) rem.pop_back();
  }
  return Poly<F>(std::move(rem));
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <CommutativeRing F>
  requires ring_traits<F>::is_field
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(*ring_traits<F>::unit_inverse(a.leading()));
}

/// Primitive gcd over the integers, normalized to a positive leading coefficient.
inline Poly<Integer> gcd(Poly<Integer> a, Poly<Integer> b) {
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) return sgn(a.leading()) < 0 ? -a : a;
  Integer c = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  // Primitive pseudo-remainder sequence.
  while (!b.is_zero()) {
    const auto delta = static_cast<unsigned long>(a.degree() - b.degree() + 1);
    Poly<Integer> r = a.scaled(Integer(power(b.leading(), delta)));
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<Integer> rem = r.coeffs();
    while (rem.size() > db) {
      Integer q = rem.back() / b.leading();
      const std::size_t shift = rem.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= q * b.coeffs()[j];
      rem.pop_back();
      while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
    }
    a = std::move(b);
    b = primitive_part(Poly<Integer>(std::move(rem)));
  }
  return primitive_part(a).scaled(c);
}

/// Renders in ascending degree: "1 - 2*t + 3*t^2".
template <CommutativeRing R>
std::string to_string(const Poly<R>& p, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const R& c = p.coeffs()[i];
    if (ring_traits<R>::is_zero(c)) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    char sign = '+';
    std::string body = render_term(c, mono, sign);
    append_term(out, sign, body);
  }
  return out.empty() ? "0" : out;
}

template <CommutativeRing R>
struct ring_traits<Poly<R>> {
  using base = ring_traits<R>;
  static constexpr bool torsion_free = base::torsion_free;
  static constexpr bool is_domain = base::is_domain;
  static constexpr bool is_field = false;
  static constexpr const char* name = "Z[u]";

  static Poly<R> zero() { return Poly<R>(); }
  static Poly<R> one() { return Poly<R>::one(); }
  static Poly<R> from_int(long n) { return Poly<R>::constant(base::from_int(n)); }
  static bool is_zero(const Poly<R>& p) { return p.is_zero(); }
  static std::string to_string(const Poly<R>& p) { return wittzeta::to_string(p, "u"); }
  static bool is_compound(const Poly<R>& p) {
    return std::count_if(p.coeffs().begin(), p.coeffs().end(),
                         [](const R& c) { return !base::is_zero(c); }) > 1 ||
           std::any_of(p.coeffs().begin(), p.coeffs().end(), [](const R& c) { return base::is_compound(c); });
  }

  static std::optional<Poly<R>> unit_inverse(const Poly<R>& p)
    requires base::is_domain
  {
    if (p.degree() != 0) return std::nullopt;
    auto inv = base::unit_inverse(p.coeffs()[0]);
    if (!inv) return std::nullopt;
    return Poly<R>::constant(*inv);
  }
  static std::optional<Poly<R>> divide_by_integer(const Poly<R>& p, const Integer& n)
    requires base::torsion_free
  {
    std::vector<R> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
      auto q = base::divide_by_integer(c, n);
      if (!q) return std::nullopt;
      v.push_back(std::move(*q));
    }
    return Poly<R>(std::move(v));
  }
  static std::optional<Poly<R>> divide_exact(const Poly<R>& a, const Poly<R>& b)
    requires base::is_domain
  {
    return wittzeta::divide_exact(a, b);
  }
};

using IntPoly = Poly<Integer>;

}  // namespace wittzeta
