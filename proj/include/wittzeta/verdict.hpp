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

#include "wittzeta/algebra/series.hpp"
#include "wittzeta/witt/witt_vector.hpp"

namespace wittzeta {

/// Outcome of an identity check. Failures name the first differing t^k
/// coefficient and render both sides of it.
struct Verdict {
  std::string identity;
  bool holds = true;
  std::size_t precision = 0;
  std::optional<std::size_t> first_difference;
  std::string lhs;
  std::string rhs;

  std::string to_string() const {
    if (holds) return "HOLDS (precision " + std::to_string(precision) + ")";
    return "FAILS at t^" + std::to_string(first_difference.value_or(0)) + ": lhs=" + lhs + ", rhs=" + rhs;
  }
};

template <CommutativeRing R>
Verdict compare(std::string identity, const Series<R>& lhs, const Series<R>& rhs) {
  Verdict v;
  v.identity = std::move(identity);
  v.precision = std::min(lhs.precision(), rhs.precision());
  if (lhs.precision() != rhs.precision()) {
    v.holds = false;
    v.first_difference = v.precision + 1;
    v.lhs = "precision " + std::to_string(lhs.precision());
    v.rhs = "precision " + std::to_string(rhs.precision());
    return v;
  }
  if (auto k = first_difference(lhs, rhs)) {
    v.holds = false;
    v.first_difference = k;
    v.lhs = ring_traits<R>::to_string(lhs[*k]);
    v.rhs = ring_traits<R>::to_string(rhs[*k]);
  }
  return v;
}

template <CommutativeRing R>
Verdict compare(std::string identity, const WittVector<R>& lhs, const WittVector<R>& rhs) {
  return compare(std::move(identity), lhs.series(), rhs.series());
}

/// A single coefficient identity, reported as a failure at t^index.
template <CommutativeRing R>
Verdict compare_coefficient(std::string identity, std::size_t index, const R& lhs, const R& rhs,
                            std::size_t precision) {
  Verdict v;
  v.identity = std::move(identity);
  v.precision = precision;
  if (!(lhs == rhs)) {
    v.holds = false;
    v.first_difference = index;
    v.lhs = ring_traits<R>::to_string(lhs);
    v.rhs = ring_traits<R>::to_string(rhs);
  }
  return v;
}

/// Ordered list of verdicts; holds when every entry holds.
struct Report {
  std::vector<Verdict> checks;

  bool holds() const {
    return std::all_of(checks.begin(), checks.end(), [](const Verdict& v) { return v.holds; });
  }
  const Verdict* first_failure() const {
    for (const auto& v : checks) {
      if (!v.holds) return &v;
    }
    return nullptr;
  }
  /// The first failure's rendering, or HOLDS at the common precision.
  std::string to_string() const {
    if (const Verdict* f = first_failure()) return f->to_string();
    std::size_t prec = 0;
    for (const auto& v : checks) prec = std::max(prec, v.precision);
    return "HOLDS (precision " + std::to_string(prec) + ")";
  }
};

}  // namespace wittzeta
