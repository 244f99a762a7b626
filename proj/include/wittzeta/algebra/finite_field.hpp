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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittzeta/algebra/ring.hpp"
#include "wittzeta/errors.hpp"

namespace wittzeta {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Splits q = p^k; nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  const auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  unsigned k = 0;
  while (q > 1) {
    q /= f[0];
    ++k;
  }
  return std::make_pair(f[0], k);
}

namespace detail {

/// Dense polynomials over F_p with small coefficients, low degree first.
using SmallPoly = std::vector<std::uint64_t>;

inline void trim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

inline SmallPoly mod_poly(SmallPoly a, const SmallPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv = inv_mod(m.back(), p);
  while (a.size() > dm && !a.empty()) {
    const std::uint64_t q = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + (p - q) * m[j]) % p;
    trim(a);
  }
  return a;
}

inline SmallPoly mul_mod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  SmallPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return mod_poly(std::move(r), m, p);
}

inline SmallPoly pow_mod(SmallPoly base, std::uint64_t e, const SmallPoly& m, std::uint64_t p) {
  SmallPoly result = mod_poly({1}, m, p);
  base = mod_poly(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m, p);
    e >>= 1;
    if (e > 0) base = mul_mod(base, base, m, p);
  }
  return result;
}

inline SmallPoly gcd_poly(SmallPoly a, SmallPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    SmallPoly r = mod_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Ben-Or test: f of degree k is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= k/2.
inline bool is_irreducible(const SmallPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  SmallPoly xpow = {0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    xpow = pow_mod(xpow, p, f, p);
    SmallPoly h = xpow;
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (gcd_poly(f, h, p).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// F_{p^k} with a deterministic modulus. Elements are encoded as indices
/// sum d_i p^i, where d_i is the coefficient of x^i in the reduced
/// polynomial representative; index 0 is zero and index 1 is one.
class FiniteField {
 public:
  using Element = std::uint64_t;

  /// Largest field for which log/antilog tables are built.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 21;

  FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (k == 0) throw DegreeZero("extension degree must be at least 1");
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (q_ > (std::uint64_t{1} << 62) / p) throw BudgetExceeded("field size exceeds 2^62");
      q_ *= p;
    }
    // Monic candidates x^k + sum a_i x^i in increasing index order sum a_i p^i.
    for (std::uint64_t idx = 0; idx < q_; ++idx) {
      detail::SmallPoly f = digits(idx);
      f.resize(k + 1, 0);
      f[k] = 1;
      if (detail::is_irreducible(f, p)) {
        modulus_ = std::move(f);
        break;
      }
    }
    if (q_ <= kTableLimit) build_tables();
  }

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return q_; }
  /// Monic modulus, constant term first.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  bool has_tables() const { return !log_.empty(); }

  Element from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Element>(r);
  }

  Element add(Element a, Element b) const {
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    if (has_tables()) {
      if (a == 0) return b;
      if (b == 0) return a;
      const std::uint64_t la = log_[a];
      const std::uint64_t d = (log_[b] + (q_ - 1) - la) % (q_ - 1);
      const std::int32_t z = zech_[d];
      if (z < 0) return 0;
      return exp_[(la + static_cast<std::uint64_t>(z)) % (q_ - 1)];
    }
    return digitwise(a, b, false);
  }
  Element neg(Element a) const {
    if (a == 0) return 0;
    if (k_ == 1) return p_ - a;
    if (p_ == 2) return a;
    if (has_tables()) return exp_[(log_[a] + neg_one_log_) % (q_ - 1)];
    return digitwise(0, a, true);
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
    if (has_tables()) return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    return encode(detail::mul_mod(digits(a), digits(b), modulus_, p_));
  }
  Element pow(Element a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (has_tables()) {
      const auto r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * e) % (q_ - 1));
      return exp_[r];
    }
    Element result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      e >>= 1;
      if (e > 0) a = mul(a, a);
    }
    return result;
  }
  std::optional<Element> inv(Element a) const {
    if (a == 0) return std::nullopt;
    if (has_tables()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
  }

  bool is_square(Element a) const {
    if (a == 0 || p_ == 2) return true;
    if (has_tables()) return log_[a] % 2 == 0;
    return pow(a, (q_ - 1) / 2) == 1;
  }

  /// Absolute trace to F_p: a + a^p + ... + a^{p^{k-1}}.
  Element trace(Element a) const {
    Element acc = 0;
    for (unsigned i = 0; i < k_; ++i) {
      acc = add(acc, a);
      a = pow(a, p_);
    }
    return acc;
  }

  /// Coefficients of the polynomial representative, low degree first.
  std::vector<std::uint64_t> digits(Element a) const {
    std::vector<std::uint64_t> d;
    while (a > 0) {
      d.push_back(a % p_);
      a /= p_;
    }
    return d;
  }
  Element encode(const std::vector<std::uint64_t>& d) const {
    Element a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  /// Renders an element as a polynomial in the generator `a`.
  std::string to_string(Element e) const {
    if (k_ == 1) return std::to_string(e);
    const auto d = digits(e);
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
      std::string body = (mono.empty() || d[i] != 1) ? std::to_string(d[i]) : "";
      if (!mono.empty()) body = body.empty() ? mono : body + "*" + mono;
      out = out.empty() ? body : out + " + " + body;
    }
    return out.empty() ? "0" : out;
  }

 private:
  Element digitwise(Element a, Element b, bool subtract) const {
    Element r = 0, scale = 1;
    while (a > 0 || b > 0) {
      const std::uint64_t da = a % p_, db = b % p_;
      r += ((subtract ? da + p_ - db : da + db) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  void build_tables() {
    if (k_ == 1 && q_ == 2) {
      log_ = {0, 0};
      exp_ = {1};
      zech_ = {-1};
      neg_one_log_ = 0;
      return;
    }
    const auto factors = prime_factors(q_ - 1);
    Element g = 0;
    for (Element cand = 2; cand < q_ && g == 0; ++cand) {
      bool primitive = true;
      for (auto r : factors) {
        if (pow(cand, (q_ - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) g = cand;
    }
    if (q_ == 2) g = 1;
    std::vector<std::uint32_t> exp(q_ - 1);
    std::vector<std::uint32_t> log(q_, 0);
    Element cur = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      exp[i] = static_cast<std::uint32_t>(cur);
      log[cur] = static_cast<std::uint32_t>(i);
      cur = mul(cur, g);
    }
    // Zech logarithms: 1 + g^d = g^zech[d], or -1 when 1 + g^d = 0.
    std::vector<std::int32_t> zech(q_ - 1);
    for (std::uint64_t d = 0; d + 1 < q_; ++d) {
      const Element s = p_ == 2 ? (exp[d] ^ 1) : digitwise(exp[d], 1, false);
      zech[d] = s == 0 ? -1 : static_cast<std::int32_t>(log[s]);
    }
    const Element minus_one = digitwise(0, 1, true);
    exp_ = std::move(exp);
    log_ = std::move(log);
    zech_ = std::move(zech);
    neg_one_log_ = log_[minus_one];
  }

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_ = 1;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
  std::uint64_t neg_one_log_ = 0;
};

/// Shared, cached field F_{p^k}; construction is deterministic so the cache
/// only saves the modulus search and table build.
inline std::shared_ptr<const FiniteField> make_field(std::uint64_t p, unsigned k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FiniteField>> cache;
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (k == 0) throw DegreeZero("extension degree must be at least 1");
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_shared<const FiniteField>(p, k);
  return slot;
}

/// Element of a finite field as a ring value. A default-constructed element
/// (and any element built from an integer without a field) is a detached
/// integer constant that adopts the field of the first attached operand.
class GFElem {
 public:
  GFElem() = default;
  explicit GFElem(long long constant) : constant_(constant) {}
  GFElem(std::shared_ptr<const FiniteField> field, FiniteField::Element value)
      : field_(std::move(field)), value_(value) {}

  const std::shared_ptr<const FiniteField>& field() const { return field_; }
  FiniteField::Element value() const { return field_ ? value_ : 0; }
  bool attached() const { return static_cast<bool>(field_); }
  long long constant() const { return constant_; }

  bool is_zero() const { return field_ ? value_ == 0 : constant_ == 0; }

  friend GFElem operator+(const GFElem& a, const GFElem& b) {
    auto f = common(a, b);
    if (!f) return GFElem(a.constant_ + b.constant_);
    return {f, f->add(a.in(*f), b.in(*f))};
  }
  friend GFElem operator-(const GFElem& a, const GFElem& b) {
    auto f = common(a, b);
    if (!f) return GFElem(a.constant_ - b.constant_);
    return {f, f->sub(a.in(*f), b.in(*f))};
  }
  friend GFElem operator*(const GFElem& a, const GFElem& b) {
    auto f = common(a, b);
    if (!f) return GFElem(a.constant_ * b.constant_);
    return {f, f->mul(a.in(*f), b.in(*f))};
  }
  GFElem operator-() const {
    if (!field_) return GFElem(-constant_);
    return {field_, field_->neg(value_)};
  }
  friend bool operator==(const GFElem& a, const GFElem& b) {
    auto f = common(a, b);
    if (!f) return a.constant_ == b.constant_;
    return a.in(*f) == b.in(*f);
  }

  std::string to_string() const { return field_ ? field_->to_string(value_) : std::to_string(constant_); }

 private:
  static std::shared_ptr<const FiniteField> common(const GFElem& a, const GFElem& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_ &&
        (a.field_->characteristic() != b.field_->characteristic() || a.field_->degree() != b.field_->degree())) {
      throw RingMismatch("finite field elements from different fields");
    }
    return a.field_ ? a.field_ : b.field_;
  }
  FiniteField::Element in(const FiniteField& f) const { return field_ ? value_ : f.from_int(constant_); }

  std::shared_ptr<const FiniteField> field_;
  FiniteField::Element value_ = 0;
  long long constant_ = 0;
};

template <>
struct ring_traits<GFElem> {
  static constexpr bool torsion_free = false;
  static constexpr bool is_domain = true;
  static constexpr bool is_field = true;
  static constexpr const char* name = "GF";

  static GFElem zero() { return GFElem(0); }
  static GFElem one() { return GFElem(1); }
  static GFElem from_int(long n) { return GFElem(n); }
  static bool is_zero(const GFElem& x) { return x.is_zero(); }
  static std::string to_string(const GFElem& x) { return x.to_string(); }
  static bool is_compound(const GFElem& x) { return x.to_string().find(' ') != std::string::npos; }

  static std::optional<GFElem> unit_inverse(const GFElem& x) {
    if (!x.attached()) {
      if (x.constant() == 1 || x.constant() == -1) return x;
      return std::nullopt;
    }
    auto inv = x.field()->inv(x.value());
    if (!inv) return std::nullopt;
    return GFElem(x.field(), *inv);
  }
  static std::optional<GFElem> divide_exact(const GFElem& a, const GFElem& b) {
    auto inv = unit_inverse(b);
    if (!inv) return std::nullopt;
    return a * *inv;
  }
};

}  // namespace wittzeta
