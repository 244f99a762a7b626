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
#include <type_traits>
#include <utility>
#include <vector>

#include "wittzeta/algebra/poly.hpp"
#include "wittzeta/algebra/resultant.hpp"
#include "wittzeta/algebra/series.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/witt/witt_vector.hpp"

namespace wittzeta {

/// Rational Witt vector p(t) -_W q(t): the series p(t) q(t)^{-1}, with
/// p(0) = q(0) = 1. Over Z and Q the pair is kept reduced (no common factor),
/// otherwise it is stored as given and compared by cross-multiplication.
template <CommutativeRing R>
class RatWitt {
 public:
  RatWitt(Poly<R> numerator, Poly<R> denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    const R one = ring_traits<R>::one();
    if (!(num_.coeff(0) == one) || !(den_.coeff(0) == one)) {
      throw NonUnitConstantTerm("rational Witt vectors need p(0) = q(0) = 1");
    }
    reduce();
  }

  static RatWitt zero() { return RatWitt(Poly<R>::one(), Poly<R>::one()); }
  /// The Witt unit (1 - t)^{-1}.
  static RatWitt unit() { return RatWitt(Poly<R>::one(), Poly<R>({ring_traits<R>::one(), R(-ring_traits<R>::one())})); }

  const Poly<R>& numerator() const { return num_; }
  const Poly<R>& denominator() const { return den_; }

  WittVector<R> expansion(std::size_t precision) const {
    return WittVector<R>(Series<R>::from_poly(num_, precision) *
                         series_invert(Series<R>::from_poly(den_, precision)));
  }

  friend bool operator==(const RatWitt& a, const RatWitt& b) {
    if constexpr (kReduces) {
      return a.num_ == b.num_ && a.den_ == b.den_;
    } else {
      return a.num_ * b.den_ == b.num_ * a.den_;
    }
  }

 private:
  static constexpr bool kReduces = std::is_same_v<R, Integer> || std::is_same_v<R, Rational>;

  void reduce() {
    if constexpr (kReduces) {
      Poly<R> g = gcd(num_, den_);
      if (g.degree() <= 0) return;
      // g(0) divides num(0) = 1, so it is a unit; normalize it to 1.
      g = g.scaled(*ring_traits<R>::unit_inverse(g.coeff(0)));
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }

  Poly<R> num_;
  Poly<R> den_;
};

/// "(1 - t)/(1 - 2*t)".
template <CommutativeRing R>
std::string to_string(const RatWitt<R>& f) {
  return "(" + to_string(f.numerator(), "t") + ")/(" + to_string(f.denominator(), "t") + ")";
}

/// The polynomial r with r(0) = 1 and (1/p) * (1/q) = 1/r in W(R):
/// r(t) = Res_x(x^{deg p} p(1/x), q(t x)) at x-degrees (deg p, deg q).
template <IntegralDomain R>
Poly<R> rat_star(const Poly<R>& p, const Poly<R>& q) {
  const R one = ring_traits<R>::one();
  if (!(p.coeff(0) == one) || !(q.coeff(0) == one)) throw NonUnitConstantTerm("rat_star needs p(0) = q(0) = 1");
  using RT = Poly<R>;
  const auto dp = static_cast<std::size_t>(p.degree());
  const auto dq = static_cast<std::size_t>(q.degree());
  std::vector<RT> rev(dp + 1);
  for (std::size_t i = 0; i <= dp; ++i) rev[dp - i] = RT::constant(p.coeff(i));
  std::vector<RT> scaled(dq + 1);
  for (std::size_t j = 0; j <= dq; ++j) scaled[j] = RT::monomial(q.coeff(j), j);
  RT r = resultant(Poly<RT>(std::move(rev)), Poly<RT>(std::move(scaled)), dp, dq);
  if (!(r.coeff(0) == one)) throw NonIntegral("rat_star produced a non-normalized constant term");
  return r;
}

template <IntegralDomain R>
RatWitt<R> rat_add(const RatWitt<R>& f, const RatWitt<R>& g) {
  return RatWitt<R>(f.numerator() * g.numerator(), f.denominator() * g.denominator());
}

template <IntegralDomain R>
RatWitt<R> rat_neg(const RatWitt<R>& f) {
  return RatWitt<R>(f.denominator(), f.numerator());
}

/// Witt product of rational elements. Writing f = a/b = (1/b) -_W (1/a) and
/// g = c/d, bilinearity gives f * g = rs(a,d) rs(b,c) / (rs(a,c) rs(b,d)).
template <IntegralDomain R>
RatWitt<R> rat_mul(const RatWitt<R>& f, const RatWitt<R>& g) {
  const auto& a = f.numerator();
  const auto& b = f.denominator();
  const auto& c = g.numerator();
  const auto& d = g.denominator();
  return RatWitt<R>(rat_star(a, d) * rat_star(b, c), rat_star(a, c) * rat_star(b, d));
}

namespace detail {

/// Original indices of a maximal set of linearly independent rows, found by
/// fraction-free elimination. Returns nullopt when the rank is below the
/// number of columns.
template <IntegralDomain R>
std::optional<std::vector<std::size_t>> independent_rows(Matrix<R> a, std::size_t cols) {
  using T = ring_traits<R>;
  std::vector<std::size_t> chosen;
  std::vector<bool> used(a.size(), false);
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t pivot = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!used[i] && !T::is_zero(a[i][k])) {
        pivot = i;
        break;
      }
    }
    if (pivot == a.size()) return std::nullopt;
    used[pivot] = true;
    chosen.push_back(pivot);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (used[i] || T::is_zero(a[i][k])) continue;
      const R factor = a[i][k];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = R(a[i][j] * a[pivot][k] - factor * a[pivot][j]);
    }
  }
  return chosen;
}

}  // namespace detail

/// Finds (p, q) with deg p, deg q <= dmax, p(0) = q(0) = 1 and p = q g mod t^{N+1},
/// minimizing deg q and then deg p. Requires 2 dmax < N.
template <IntegralDomain R>
std::optional<RatWitt<R>> rationalize(const WittVector<R>& g, std::size_t dmax) {
  using T = ring_traits<R>;
  const std::size_t n = g.precision();
  if (2 * dmax >= n) {
    throw PrecisionTooLow("rationalize needs 2*dmax < precision (dmax=" + std::to_string(dmax) +
                          ", precision=" + std::to_string(n) + ")");
  }
  auto c = [&](long i) { return i < 0 ? T::zero() : g[static_cast<std::size_t>(i)]; };
  for (std::size_t dq = 0; dq <= dmax; ++dq) {
    for (std::size_t dp = 0; dp <= dmax; ++dp) {
      std::vector<R> q(dq + 1, T::zero());
      q[0] = T::one();
      if (dq > 0) {
        // sum_{j=1}^{dq} q_j c_{m-j} = -c_m for m = dp+1..N.
        Matrix<R> a;
        std::vector<R> rhs;
        for (std::size_t m = dp + 1; m <= n; ++m) {
          std::vector<R> row;
          for (std::size_t j = 1; j <= dq; ++j) row.push_back(c(static_cast<long>(m) - static_cast<long>(j)));
          a.push_back(std::move(row));
          rhs.push_back(R(-g[m]));
        }
        auto rows = detail::independent_rows(a, dq);
        if (!rows) continue;
        Matrix<R> square;
        for (auto r : *rows) square.push_back(a[r]);
        const R det = determinant(square);
        bool integral = true;
        for (std::size_t j = 0; j < dq && integral; ++j) {
          Matrix<R> replaced = square;
          for (std::size_t i = 0; i < dq; ++i) replaced[i][j] = rhs[(*rows)[i]];
          auto qj = T::divide_exact(determinant(replaced), det);
          if (!qj) integral = false;
          else q[j + 1] = std::move(*qj);
        }
        if (!integral) continue;
      }
      // p = q g truncated at degree dp; the remaining coefficients must vanish.
      bool ok = true;
      std::vector<R> p(dp + 1, T::zero());
      for (std::size_t m = 0; m <= n && ok; ++m) {
        R acc = T::zero();
        for (std::size_t j = 0; j <= dq && j <= m; ++j) acc = R(acc + q[j] * g[m - j]);
        if (m <= dp) p[m] = std::move(acc);
        else ok = T::is_zero(acc);
      }
      if (!ok) continue;
      return RatWitt<R>(Poly<R>(std::move(p)), Poly<R>(std::move(q)));
    }
  }
  return std::nullopt;
}

}  // namespace wittzeta
