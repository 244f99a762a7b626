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

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <string>

namespace wittzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Capabilities of a coefficient ring. Specialized for every supported ring;
/// generic code never touches a ring except through this table and the
/// arithmetic operators.
///
/// Every specialization provides
///   zero(), one(), from_int(long), is_zero(x), to_string(x), is_compound(x)
///   torsion_free, is_domain, is_field
///   unit_inverse(x)          -> optional inverse when x is a unit
///   divide_by_integer(x, n)  -> x/n when it lies in the ring (torsion-free only)
///   divide_exact(a, b)       -> a/b when b divides a (integral domains only)
template <class R>
struct ring_traits;

template <class R>
concept CommutativeRing = requires(const R& a, const R& b) {
  { R(a + b) } -> std::same_as<R>;
  { R(a - b) } -> std::same_as<R>;
  { R(a * b) } -> std::same_as<R>;
  { R(-a) } -> std::same_as<R>;
  { a == b } -> std::convertible_to<bool>;
  { ring_traits<R>::zero() } -> std::same_as<R>;
  { ring_traits<R>::one() } -> std::same_as<R>;
  { ring_traits<R>::is_zero(a) } -> std::same_as<bool>;
  { ring_traits<R>::to_string(a) } -> std::same_as<std::string>;
};

template <class R>
concept TorsionFreeRing = CommutativeRing<R> && ring_traits<R>::torsion_free;

template <class R>
concept IntegralDomain = CommutativeRing<R> && ring_traits<R>::is_domain;

template <>
struct ring_traits<Integer> {
  static constexpr bool torsion_free = true;
  static constexpr bool is_domain = true;
  static constexpr bool is_field = false;
  static constexpr const char* name = "Z";

  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static Integer from_int(long n) { return Integer(n); }
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
  static std::string to_string(const Integer& x) { return x.get_str(); }
  static bool is_compound(const Integer&) { return false; }

  static std::optional<Integer> unit_inverse(const Integer& x) {
    if (x == 1 || x == -1) return x;
    return std::nullopt;
  }
  static std::optional<Integer> divide_by_integer(const Integer& x, const Integer& n) {
    return divide_exact(x, n);
  }
  static std::optional<Integer> divide_exact(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) return std::nullopt;
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

template <>
struct ring_traits<Rational> {
  static constexpr bool torsion_free = true;
  static constexpr bool is_domain = true;
  static constexpr bool is_field = true;
  static constexpr const char* name = "Q";

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static bool is_compound(const Rational&) { return false; }

  static std::optional<Rational> unit_inverse(const Rational& x) {
    if (sgn(x) == 0) return std::nullopt;
    return Rational(1 / x);
  }
  static std::optional<Rational> divide_by_integer(const Rational& x, const Integer& n) {
    if (sgn(n) == 0) return std::nullopt;
    return Rational(x / Rational(n));
  }
  static std::optional<Rational> divide_exact(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) return std::nullopt;
    return Rational(a / b);
  }
};

/// Integer power by repeated squaring; exponent 0 gives one.
template <CommutativeRing R>
R power(R base, unsigned long exponent) {
  R result = ring_traits<R>::one();
  while (exponent > 0) {
    if (exponent & 1UL) result = R(result * base);
    exponent >>= 1;
    if (exponent > 0) base = R(base * base);
  }
  return result;
}

/// Renders `coeff * monomial` for use inside a sum. `sign` receives '+' or '-'
/// and the returned body carries no leading sign.
template <CommutativeRing R>
std::string render_term(const R& coeff, const std::string& monomial, char& sign) {
  using T = ring_traits<R>;
  std::string body = T::to_string(coeff);
  sign = '+';
  if (T::is_compound(coeff)) {
    if (monomial.empty()) return body;
    return "(" + body + ")*" + monomial;
  }
  if (!body.empty() && body.front() == '-') {
    sign = '-';
    body.erase(0, 1);
  }
  if (monomial.empty()) return body;
  if (body == "1") return monomial;
  return body + "*" + monomial;
}

/// Joins rendered terms into "a + b - c"; an empty list renders as "0".
inline void append_term(std::string& out, char sign, const std::string& body) {
  if (out.empty()) {
    out = (sign == '-' ? "-" : "") + body;
  } else {
    out += (sign == '-' ? " - " : " + ");
    out += body;
  }
}

}  // namespace wittzeta
