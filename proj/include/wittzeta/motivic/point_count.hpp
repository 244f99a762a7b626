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
#include <memory>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wittzeta/algebra/finite_field.hpp"
#include "wittzeta/algebra/series.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/motivic/variety.hpp"
#include "wittzeta/witt/witt_vector.hpp"

namespace wittzeta {

struct CountOptions {
  /// Worker threads for enumeration; the result does not depend on it.
  unsigned threads = 1;
  /// Maximum work per connected block: enumerated coordinate tuples, each
  /// weighted by the bit length of q^m once the field is too large for tables.
  std::uint64_t budget = 10'000'000;
};

namespace detail {

using FieldPoly = std::vector<FiniteField::Element>;

inline void trim(const FiniteField&, FieldPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FieldPoly field_mod(const FiniteField& f, FieldPoly a, const FieldPoly& m) {
  trim(f, a);
  const std::size_t dm = m.size() - 1;
  const auto inv = *f.inv(m.back());
  while (a.size() > dm && !a.empty()) {
    const auto q = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(q, m[j]));
    trim(f, a);
  }
  return a;
}

inline FieldPoly field_mulmod(const FiniteField& f, const FieldPoly& a, const FieldPoly& b, const FieldPoly& m) {
  if (a.empty() || b.empty()) return {};
  FieldPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return field_mod(f, std::move(r), m);
}

inline FieldPoly field_gcd(const FiniteField& f, FieldPoly a, FieldPoly b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    FieldPoly r = field_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Number of distinct roots in F_Q of a nonzero polynomial: deg gcd(g, x^Q - x).
inline std::uint64_t distinct_root_count(const FiniteField& f, const FieldPoly& g) {
  const std::size_t d = g.size() - 1;
  if (d == 0) return 0;
  if (d == 1) return 1;
  if (d == 2) {
    const auto a = g[2], b = g[1], c = g[0];
    if (f.characteristic() != 2) {
      const auto disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(a, c)));
      if (disc == 0) return 1;
      return f.is_square(disc) ? 2 : 0;
    }
    // y = (b/a) w turns a y^2 + b y + c into w^2 + w + ac/b^2.
    if (b == 0) return 1;
    const auto u = f.mul(f.mul(a, c), *f.inv(f.mul(b, b)));
    return f.trace(u) == 0 ? 2 : 0;
  }
  FieldPoly result = {1};
  FieldPoly base = field_mod(f, {0, 1}, g);
  for (std::uint64_t e = f.size(); e > 0; e >>= 1) {
    if (e & 1) result = field_mulmod(f, result, base, g);
    if (e > 1) base = field_mulmod(f, base, base, g);
  }
  if (result.size() < 2) result.resize(2, 0);
  result[1] = f.sub(result[1], 1);
  trim(f, result);
  return field_gcd(f, g, result).size() - 1;
}

struct CompiledTerm {
  FiniteField::Element coeff;
  std::vector<std::uint32_t> exps;  // per block coordinate
};
using CompiledEquation = std::vector<CompiledTerm>;

/// Exhaustive F_Q-point count of one connected block of factors with its
/// equations. Projective factors are enumerated by normalized representatives
/// (first nonzero coordinate equal to one). All but the last free coordinate of
/// each stratum are enumerated; the last one is resolved by counting distinct
/// roots of the resulting univariate system.
class BlockCounter {
 public:
  BlockCounter(std::shared_ptr<const FiniteField> field, const std::vector<const AmbientFactor*>& factors,
               const std::vector<const MPoly*>& equations)
      : field_(std::move(field)) {
    std::map<std::string, std::size_t> index;
    for (const auto* fac : factors) {
      for (const auto& v : fac->variables) index[v] = coords_++;
    }
    for (const auto* eq : equations) {
      CompiledEquation ce;
      for (const auto& [exps, c] : eq->terms()) {
        CompiledTerm t{field_->from_int(static_cast<long long>(c.get_ui())), std::vector<std::uint32_t>(coords_, 0)};
        for (std::size_t i = 0; i < exps.size(); ++i) t.exps[index.at(eq->variables()[i])] = exps[i];
        ce.push_back(std::move(t));
      }
      equations_.push_back(std::move(ce));
    }
    build_strata(factors);
  }

  /// Enumerated tuples summed over strata.
  Integer work() const {
    Integer total = 0;
    const Integer q(static_cast<unsigned long>(field_->size()));
    for (const auto& s : strata_) {
      const std::size_t free = std::count(s.begin(), s.end(), kFree);
      Integer w;
      mpz_pow_ui(w.get_mpz_t(), q.get_mpz_t(), free > 0 ? free - 1 : 0);
      total += w;
    }
    return total;
  }

  Integer count(unsigned threads) const {
    Integer total = 0;
    for (const auto& s : strata_) total += count_stratum(s, std::max(1u, threads));
    return total;
  }

 private:
  static constexpr std::int64_t kFree = -1;
  using Stratum = std::vector<std::int64_t>;  // fixed element index or kFree, per coordinate

  void build_strata(const std::vector<const AmbientFactor*>& factors) {
    strata_ = {Stratum{}};
    for (const auto* fac : factors) {
      std::vector<Stratum> local;
      if (fac->kind == AmbientKind::Affine) {
        local.push_back(Stratum(fac->dim, kFree));
      } else {
        for (unsigned lead = 0; lead <= fac->dim; ++lead) {
          Stratum s(fac->dim + 1, kFree);
          for (unsigned i = 0; i < lead; ++i) s[i] = 0;
          s[lead] = 1;
          local.push_back(std::move(s));
        }
      }
      std::vector<Stratum> next;
      for (const auto& a : strata_) {
        for (const auto& b : local) {
          Stratum s = a;
          s.insert(s.end(), b.begin(), b.end());
          next.push_back(std::move(s));
        }
      }
      strata_ = std::move(next);
    }
  }

  Integer count_stratum(const Stratum& s, unsigned threads) const {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == kFree) free.push_back(i);
    }
    std::vector<FiniteField::Element> point(coords_, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != kFree) point[i] = static_cast<FiniteField::Element>(s[i]);
    }
    if (free.empty()) return Integer(satisfies(point) ? 1 : 0);

    // Resolve the free coordinate of least degree; ties go to the later one.
    std::size_t pick = free.size() - 1;
    for (std::size_t i = free.size(); i-- > 0;) {
      if (degree_of(free[i]) < degree_of(free[pick])) pick = i;
    }
    const std::size_t last = free[pick];
    free.erase(free.begin() + static_cast<long>(pick));
    const std::uint64_t q = field_->size();
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < free.size(); ++i) tuples *= q;

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, tuples));
    std::vector<unsigned __int128> partial(workers, 0);
    auto run = [&](unsigned w) {
      std::vector<FiniteField::Element> local = point;
      const std::uint64_t begin = tuples * w / workers;
      const std::uint64_t end = tuples * (w + 1) / workers;
      unsigned __int128 acc = 0;
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t rest = idx;
        for (auto c : free) {
          local[c] = rest % q;
          rest /= q;
        }
        acc += last_coordinate_solutions(local, last);
      }
      partial[w] = acc;
    };
    if (workers <= 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
    unsigned __int128 sum = 0;
    for (auto p : partial) sum += p;
    return to_integer(sum);
  }

  std::uint32_t degree_of(std::size_t coord) const {
    std::uint32_t d = 0;
    for (const auto& eq : equations_) {
      for (const auto& t : eq) d = std::max(d, t.exps[coord]);
    }
    return d;
  }

  bool satisfies(const std::vector<FiniteField::Element>& point) const {
    const auto& f = *field_;
    for (const auto& eq : equations_) {
      FiniteField::Element acc = 0;
      for (const auto& t : eq) {
        FiniteField::Element v = t.coeff;
        for (std::size_t i = 0; i < coords_ && v != 0; ++i) {
          if (t.exps[i]) v = f.mul(v, f.pow(point[i], t.exps[i]));
        }
        acc = f.add(acc, v);
      }
      if (acc != 0) return false;
    }
    return true;
  }

  std::uint64_t last_coordinate_solutions(const std::vector<FiniteField::Element>& point, std::size_t last) const {
    const auto& f = *field_;
    FieldPoly g;
    for (const auto& eq : equations_) {
      FieldPoly u;
      for (const auto& t : eq) {
        FiniteField::Element v = t.coeff;
        for (std::size_t i = 0; i < coords_ && v != 0; ++i) {
          if (i != last && t.exps[i]) v = f.mul(v, f.pow(point[i], t.exps[i]));
        }
        if (v == 0) continue;
        const std::uint32_t e = t.exps[last];
        if (u.size() <= e) u.resize(e + 1, 0);
        u[e] = f.add(u[e], v);
      }
      trim(f, u);
      if (u.empty()) continue;
      g = g.empty() ? std::move(u) : field_gcd(f, std::move(g), std::move(u));
      if (g.size() == 1) return 0;
    }
    if (g.empty()) return f.size();
    return distinct_root_count(f, g);
  }

  static Integer to_integer(unsigned __int128 v) {
    Integer hi(static_cast<unsigned long>(v >> 64));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
    return Integer((hi << 64) + lo);
  }

  std::shared_ptr<const FiniteField> field_;
  std::size_t coords_ = 0;
  std::vector<CompiledEquation> equations_;
  std::vector<Stratum> strata_;
};

inline Integer integer_power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace detail

/// Number of F_{q^m}-points of V, q = p^k. Factors not linked by any
/// equation are counted independently (closed forms when unconstrained).
/// Throws BudgetExceeded before enumerating a block whose weighted tuple
/// count exceeds the budget.
inline Integer count_points(const VarietyDesc& v, unsigned m, const CountOptions& options = {}) {
  if (m == 0) throw DegreeZero("extension degree m must be at least 1");
  const auto& factors = v.factors();
  const std::uint64_t p = v.characteristic();
  const unsigned degree = v.field_degree() * m;
  const Integer q = detail::integer_power(Integer(static_cast<unsigned long>(p)), degree);

  // Union-find over factors, joined by shared equations.
  std::vector<std::size_t> parent(factors.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& name : factors[i].variables) owner[name] = i;
  }
  std::vector<std::size_t> eq_factor(v.equations().size(), factors.size());
  for (std::size_t e = 0; e < v.equations().size(); ++e) {
    const auto& vars = v.equations()[e].variables();
    if (vars.empty()) continue;
    const std::size_t first = owner.at(vars.front());
    for (const auto& name : vars) parent[find(owner.at(name))] = find(first);
    eq_factor[e] = first;
  }
  // A nonzero constant equation has no solutions.
  for (std::size_t e = 0; e < v.equations().size(); ++e) {
    if (eq_factor[e] == factors.size()) return Integer(0);
  }

  Integer total = 1;
  for (std::size_t root = 0; root < factors.size(); ++root) {
    if (find(root) != root) continue;
    std::vector<const AmbientFactor*> block;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (find(i) == root) block.push_back(&factors[i]);
    }
    std::vector<const MPoly*> eqs;
    for (std::size_t e = 0; e < v.equations().size(); ++e) {
      if (find(eq_factor[e]) == root) eqs.push_back(&v.equations()[e]);
    }
    if (eqs.empty()) {
      for (const auto* f : block) {
        if (f->kind == AmbientKind::Affine) {
          total *= detail::integer_power(q, f->dim);
        } else {
          Integer s = 0;
          for (unsigned i = 0; i <= f->dim; ++i) s += detail::integer_power(q, i);
          total *= s;
        }
      }
      continue;
    }
    if (q > Integer("4611686018427387904")) throw BudgetExceeded("field F_" + q.get_str() + " is too large");
    detail::BlockCounter counter(make_field(p, degree), block, eqs);
    const Integer tuples = counter.work();
    Integer work = tuples;
    if (q > Integer(static_cast<unsigned long>(FiniteField::kTableLimit))) {
      work *= static_cast<unsigned long>(mpz_sizeinbase(q.get_mpz_t(), 2));
    }
    if (work > Integer(static_cast<unsigned long>(options.budget))) {
      throw BudgetExceeded("enumerating " + tuples.get_str() + " tuples over F_" + q.get_str() + " (work " +
                           work.get_str() + ") exceeds budget " + std::to_string(options.budget));
    }
    total *= counter.count(options.threads);
  }
  return total;
}

/// N_1..N_D.
inline std::vector<Integer> point_counts(const VarietyDesc& v, std::size_t degree, const CountOptions& options = {}) {
  std::vector<Integer> out;
  for (std::size_t m = 1; m <= degree; ++m) out.push_back(count_points(v, static_cast<unsigned>(m), options));
  return out;
}

inline int mobius(std::size_t n) {
  int result = 1;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

/// Closed points of each degree from point counts N_1..N_D:
/// B_d = (1/d) sum_{e | d} mu(e) N_{d/e}. Throws CensusInconsistent when some
/// B_d is not a non-negative integer.
inline std::vector<Integer> census_from_counts(const std::vector<Integer>& counts) {
  std::vector<Integer> out;
  for (std::size_t d = 1; d <= counts.size(); ++d) {
    Integer sum = 0;
    for (std::size_t e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      const int mu = mobius(e);
      if (mu != 0) sum += mu * counts[d / e - 1];
    }
    const Integer dd(static_cast<unsigned long>(d));
    if (!mpz_divisible_p(sum.get_mpz_t(), dd.get_mpz_t()) || sgn(sum) < 0) {
      throw CensusInconsistent("degree " + std::to_string(d) + " closed-point count " + sum.get_str() + "/" +
                               std::to_string(d) + " is not a non-negative integer");
    }
    out.push_back(Integer(sum / dd));
  }
  return out;
}

inline std::vector<Integer> closed_point_census(const VarietyDesc& v, std::size_t degree,
                                                const CountOptions& options = {}) {
  return census_from_counts(point_counts(v, degree, options));
}

/// s_n = number of effective zero-cycles of degree n: coefficients of
/// prod_{d <= N} (1 - t^d)^{-B_d}.
inline std::vector<Integer> sym_products_from_census(const std::vector<Integer>& census, std::size_t precision) {
  Series<Integer> acc = Series<Integer>::one(precision);
  for (std::size_t d = 1; d <= precision && d <= census.size(); ++d) {
    if (sgn(census[d - 1]) == 0) continue;
    const auto row = negative_binomial_coefficients(census[d - 1], precision / d);
    std::vector<Integer> factor(precision + 1, Integer(0));
    for (std::size_t j = 0; j * d <= precision; ++j) factor[j * d] = row[j];
    acc = acc * Series<Integer>(std::move(factor));
  }
  return acc.coeffs();
}

inline std::vector<Integer> sym_product_counts(const VarietyDesc& v, std::size_t precision,
                                               const CountOptions& options = {}) {
  return sym_products_from_census(closed_point_census(v, precision, options), precision);
}

/// Weil zeta function sum_n #S^n(V)(F_q) t^n, truncated at t^N.
inline WittVector<Integer> weil_zeta(const VarietyDesc& v, std::size_t precision, const CountOptions& options = {}) {
  return WittVector<Integer>(sym_product_counts(v, precision, options));
}

}  // namespace wittzeta
