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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wittzeta/algebra/poly.hpp"
#include "wittzeta/algebra/ring.hpp"

namespace wittzeta {

/// Sparse multivariate polynomial with integer coefficients over named
/// variables. Canonical form: variable names sorted and all of them used,
/// terms sorted by exponent vector, no zero coefficients.
class MPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Term = std::pair<Exponents, Integer>;

  MPoly() = default;
  MPoly(long c) : MPoly(Integer(c)) {}  // NOLINT: integer literals are polynomials
  MPoly(const Integer& c) {             // NOLINT
    if (sgn(c) != 0) terms_.push_back({{}, c});
  }

  static MPoly variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_.push_back({{1}, Integer(1)});
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<Integer> as_constant() const {
    if (terms_.empty()) return Integer(0);
    if (!vars_.empty()) return std::nullopt;
    return terms_.front().second;
  }

  /// Total degree; -1 for zero.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(sum(e)));
    return d;
  }

  /// Exponent of `name` in each term, or 0 when the variable does not occur.
  std::uint32_t degree_in(const std::string& name) const {
    const auto idx = index_of(name);
    if (!idx) return 0;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
    return d;
  }

  /// True when every term has the same total degree in `names`.
  bool is_homogeneous_in(const std::vector<std::string>& names) const {
    std::optional<std::uint32_t> deg;
    for (const auto& [e, c] : terms_) {
      std::uint32_t d = 0;
      for (const auto& n : names) {
        if (auto i = index_of(n)) d += e[*i];
      }
      if (deg && *deg != d) return false;
      deg = d;
    }
    return true;
  }

  /// Coefficients of powers of `name`, each a polynomial in the other variables.
  std::vector<MPoly> coefficients_in(const std::string& name) const {
    const auto idx = index_of(name);
    if (!idx) return {*this};
    std::vector<MPoly> out(degree_in(name) + 1);
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*idx));
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(*idx));
      buckets[e[*idx]].push_back({std::move(r), c});
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = from_terms(rest, std::move(buckets[k]));
    return out;
  }

  /// Univariate view when only `name` (or nothing) occurs.
  std::optional<Poly<Integer>> as_univariate(const std::string& name) const {
    if (vars_.size() > 1 || (vars_.size() == 1 && vars_[0] != name)) return std::nullopt;
    std::vector<Integer> v;
    for (const auto& [e, c] : terms_) {
      const std::size_t d = e.empty() ? 0 : e[0];
      if (v.size() <= d) v.resize(d + 1, Integer(0));
      v[d] = c;
    }
    return Poly<Integer>(std::move(v));
  }

  static MPoly from_univariate(const Poly<Integer>& p, const std::string& name) {
    MPoly out;
    const MPoly x = variable(name);
    MPoly xp(1);
    for (const auto& c : p.coeffs()) {
      out += xp * MPoly(c);
      xp = xp * x;
    }
    return out;
  }

  /// Renames variables; the map need not be total.
  MPoly renamed(const std::map<std::string, std::string>& mapping) const {
    MPoly out;
    for (const auto& [e, c] : terms_) {
      MPoly term(c);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = mapping.find(vars_[i]);
        const MPoly v = variable(it == mapping.end() ? vars_[i] : it->second);
        for (std::uint32_t k = 0; k < e[i]; ++k) term = term * v;
      }
      out += term;
    }
    return out;
  }

  MPoly operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  MPoly& operator+=(const MPoly& o) { return *this = combine(*this, o, false); }
  MPoly& operator-=(const MPoly& o) { return *this = combine(*this, o, true); }
  friend MPoly operator+(const MPoly& a, const MPoly& b) { return combine(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return combine(a, b, true); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    const auto vars = merged_vars(a.vars_, b.vars_);
    const auto ta = a.aligned_terms(vars);
    const auto tb = b.aligned_terms(vars);
    std::unordered_map<Exponents, Integer, ExponentHash> acc;
    acc.reserve(ta.size() * tb.size());
    Exponents e(vars.size());
    for (const auto& [ea, ca] : ta) {
      for (const auto& [eb, cb] : tb) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = acc.try_emplace(e);
        mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, v] : acc) {
      if (sgn(v) != 0) terms.push_back({k, std::move(v)});
    }
    return from_terms(vars, std::move(terms));
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  MPoly scaled(const Integer& c) const {
    if (sgn(c) == 0) return MPoly();
    MPoly out = *this;
    for (auto& [e, k] : out.terms_) k *= c;
    return out;
  }

  /// Exact quotient a / b, when it exists.
  static std::optional<MPoly> exact_quotient(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (auto c = b.as_constant()) {
      MPoly out = a;
      for (auto& [e, k] : out.terms_) {
        if (!mpz_divisible_p(k.get_mpz_t(), c->get_mpz_t())) return std::nullopt;
        mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), c->get_mpz_t());
      }
      return out;
    }
    const auto vars = merged_vars(a.vars_, b.vars_);
    MPoly rem = a;
    MPoly quot;
    const auto tb = b.aligned_terms(vars);
    const auto& [lead_e, lead_c] = tb.back();
    while (!rem.is_zero()) {
      const auto tr = rem.aligned_terms(vars);
      const auto& [re, rc] = tr.back();
      Exponents qe(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (re[i] < lead_e[i]) return std::nullopt;
        qe[i] = re[i] - lead_e[i];
      }
      auto qc = ring_traits<Integer>::divide_exact(rc, lead_c);
      if (!qc) return std::nullopt;
      const MPoly q = from_terms(vars, {{qe, *qc}});
      quot += q;
      rem -= q * b;
    }
    return quot;
  }

  /// Graded rendering: ascending total degree, and within a degree the
  /// lexicographically larger monomial first ("-1 + x^2 + x*y + y^2").
  std::string to_string() const {
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
      const auto dx = sum(x->first), dy = sum(y->first);
      if (dx != dy) return dx < dy;
      return x->first > y->first;
    });
    std::string out;
    for (const Term* t : order) {
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (t->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
      }
      char sign = '+';
      std::string body = render_term(t->second, mono, sign);
      append_term(out, sign, body);
    }
    return out.empty() ? "0" : out;
  }

 private:
  struct ExponentHash {
    std::size_t operator()(const Exponents& e) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto x : e) h = (h ^ x) * 0x100000001b3ULL;
      return h;
    }
  };

  static std::uint32_t sum(const Exponents& e) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    return s;
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  static std::vector<std::string> merged_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  /// Terms re-indexed over `vars` (a superset of vars_), sorted.
  std::vector<Term> aligned_terms(const std::vector<std::string>& vars) const {
    if (vars == vars_) return terms_;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      pos[i] = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      Exponents r(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) r[pos[i]] = e[i];
      out.push_back({std::move(r), c});
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return out;
  }

  /// Builds a canonical polynomial from possibly unsorted, zero-free terms.
  static MPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
    std::vector<bool> used(vars.size(), false);
    for (const auto& [e, c] : terms) {
      for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
    }
    MPoly out;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (used[i]) {
        keep.push_back(i);
        out.vars_.push_back(vars[i]);
      }
    }
    if (keep.size() != vars.size()) {
      for (auto& [e, c] : terms) {
        Exponents r;
        r.reserve(keep.size());
        for (auto i : keep) r.push_back(e[i]);
        e = std::move(r);
      }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    out.terms_ = std::move(terms);
    return out;
  }

  static MPoly combine(const MPoly& a, const MPoly& b, bool subtract) {
    const auto vars = merged_vars(a.vars_, b.vars_);
    const auto ta = a.aligned_terms(vars);
    const auto tb = b.aligned_terms(vars);
    std::vector<Term> out;
    out.reserve(ta.size() + tb.size());
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
      if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
        out.push_back(ta[i++]);
      } else if (i == ta.size() || tb[j].first < ta[i].first) {
        out.push_back({tb[j].first, subtract ? Integer(-tb[j].second) : tb[j].second});
        ++j;
      } else {
        Integer c = subtract ? Integer(ta[i].second - tb[j].second) : Integer(ta[i].second + tb[j].second);
        if (sgn(c) != 0) out.push_back({ta[i].first, std::move(c)});
        ++i;
        ++j;
      }
    }
    return from_terms(vars, std::move(out));
  }

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

template <>
struct ring_traits<MPoly> {
  static constexpr bool torsion_free = true;
  static constexpr bool is_domain = true;
  static constexpr bool is_field = false;
  static constexpr const char* name = "Z[x...]";

  static MPoly zero() { return MPoly(); }
  static MPoly one() { return MPoly(1); }
  static MPoly from_int(long n) { return MPoly(n); }
  static bool is_zero(const MPoly& p) { return p.is_zero(); }
  static std::string to_string(const MPoly& p) { return p.to_string(); }
  static bool is_compound(const MPoly& p) {
    return p.terms().size() > 1;
  }

  static std::optional<MPoly> unit_inverse(const MPoly& p) {
    auto c = p.as_constant();
    if (!c || !(*c == 1 || *c == -1)) return std::nullopt;
    return p;
  }
  static std::optional<MPoly> divide_by_integer(const MPoly& p, const Integer& n) {
    if (sgn(n) == 0) return std::nullopt;
    return MPoly::exact_quotient(p, MPoly(n));
  }
  static std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) { return MPoly::exact_quotient(a, b); }
};

}  // namespace wittzeta
