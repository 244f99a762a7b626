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
#include <random>
#include <string>
#include <vector>

#include "wittzeta/wittzeta.hpp"

namespace wittzeta::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Integer random_integer(Rng& rng, long lo = -5, long hi = 5) { return Integer(uniform(rng, lo, hi)); }

inline IntPoly random_upoly(Rng& rng, int max_degree = 3, long bound = 2) {
  std::vector<Integer> c;
  const int d = static_cast<int>(uniform(rng, 0, max_degree));
  for (int i = 0; i <= d; ++i) c.push_back(random_integer(rng, -bound, bound));
  return IntPoly(std::move(c));
}

/// Polynomial with constant term 1 and small integer coefficients.
inline IntPoly random_unit_poly(Rng& rng, int max_degree, long bound) {
  std::vector<Integer> c{Integer(1)};
  const int d = static_cast<int>(uniform(rng, 0, max_degree));
  for (int i = 1; i <= d; ++i) c.push_back(random_integer(rng, -bound, bound));
  return IntPoly(std::move(c));
}

inline WittVector<Integer> random_witt(Rng& rng, std::size_t n, long bound = 4) {
  std::vector<Integer> c{Integer(1)};
  for (std::size_t i = 1; i <= n; ++i) c.push_back(random_integer(rng, -bound, bound));
  return WittVector<Integer>(std::move(c));
}

inline WittVector<IntPoly> random_witt_u(Rng& rng, std::size_t n) {
  std::vector<IntPoly> c{IntPoly::one()};
  for (std::size_t i = 1; i <= n; ++i) c.push_back(random_upoly(rng, 2, 2));
  return WittVector<IntPoly>(std::move(c));
}

inline Series<Integer> int_series(std::vector<long> v) {
  std::vector<Integer> c;
  for (long x : v) c.emplace_back(x);
  return Series<Integer>(std::move(c));
}

inline WittVector<Integer> int_witt(std::vector<long> v) { return WittVector<Integer>(int_series(std::move(v))); }

inline IntPoly ipoly(std::vector<long> v) {
  std::vector<Integer> c;
  for (long x : v) c.emplace_back(x);
  return IntPoly(std::move(c));
}

inline std::vector<Integer> ints(std::vector<long> v) {
  std::vector<Integer> c;
  for (long x : v) c.emplace_back(x);
  return c;
}

inline MPoly P(const std::string& s) { return parse_polynomial(s); }

}  // namespace wittzeta::testing
