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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wittzeta/algebra/mpoly.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/motivic/variety.hpp"

namespace wittzeta {

/// The class of a point, [Spec k]; the unit of K0.
struct PointAtom {
  friend bool operator==(const PointAtom&, const PointAtom&) = default;
};

/// A class known only through its measure values, e.g. {"euler": 2,
/// "poincare": 1 + u^2}. Values are integer polynomial expressions.
struct SymbolicAtom {
  std::string name;
  std::map<std::string, MPoly> values;
};

/// Generator of a K0 combination: the point, an equation-defined variety, or
/// a symbolic class.
class Atom {
 public:
  Atom() : value_(PointAtom{}) {}
  Atom(PointAtom p) : value_(p) {}                  // NOLINT
  Atom(VarietyDesc v) : value_(std::move(v)) {}     // NOLINT
  Atom(SymbolicAtom s) : value_(std::move(s)) {}    // NOLINT

  bool is_point() const { return std::holds_alternative<PointAtom>(value_); }
  const VarietyDesc* variety() const { return std::get_if<VarietyDesc>(&value_); }
  const SymbolicAtom* symbolic() const { return std::get_if<SymbolicAtom>(&value_); }

  std::string key() const {
    if (is_point()) return "pt";
    if (const auto* v = variety()) return "V:" + v->key();
    return "S:" + symbolic()->name;
  }
  std::string describe() const {
    if (is_point()) return "[pt]";
    if (const auto* v = variety()) return "[" + v->key() + "]";
    return "[" + symbolic()->name + "]";
  }

  /// Product of generators. Symbolic values multiply entrywise (measures are
  /// ring homomorphisms); mixing varieties with symbolic classes is rejected.
  friend Atom operator*(const Atom& a, const Atom& b) {
    if (a.is_point()) return b;
    if (b.is_point()) return a;
    if (a.variety() && b.variety()) return product(*a.variety(), *b.variety());
    if (a.symbolic() && b.symbolic()) {
      SymbolicAtom s{a.symbolic()->name + "*" + b.symbolic()->name, {}};
      for (const auto& [measure, value] : a.symbolic()->values) {
        auto it = b.symbolic()->values.find(measure);
        if (it != b.symbolic()->values.end()) s.values[measure] = value * it->second;
      }
      return s;
    }
    throw UnsupportedClass("product of a variety with a symbolic class");
  }

 private:
  std::variant<PointAtom, VarietyDesc, SymbolicAtom> value_;
};

/// Formal integer combination sum m_i [A_i] in K0, like terms collected.
class K0Class {
 public:
  K0Class() = default;
  K0Class(Atom a) { add(std::move(a), Integer(1)); }  // NOLINT

  static K0Class point() { return K0Class(Atom(PointAtom{})); }

  /// (coefficient, atom) pairs in key order, zero coefficients omitted.
  std::vector<std::pair<Integer, const Atom*>> terms() const {
    std::vector<std::pair<Integer, const Atom*>> out;
    for (const auto& [k, t] : terms_) out.push_back({t.second, &t.first});
    return out;
  }

  /// The atom when the class is exactly 1 * [A].
  std::optional<Atom> single_atom() const {
    if (terms_.size() != 1 || terms_.begin()->second.second != 1) return std::nullopt;
    return terms_.begin()->second.first;
  }

  friend K0Class operator+(K0Class a, const K0Class& b) {
    for (const auto& [k, t] : b.terms_) a.add(t.first, t.second);
    return a;
  }
  friend K0Class operator-(K0Class a, const K0Class& b) {
    for (const auto& [k, t] : b.terms_) a.add(t.first, Integer(-t.second));
    return a;
  }
  friend K0Class operator*(const Integer& m, const K0Class& a) {
    K0Class out;
    for (const auto& [k, t] : a.terms_) out.add(t.first, Integer(m * t.second));
    return out;
  }
  friend K0Class operator*(const K0Class& a, const K0Class& b) {
    K0Class out;
    for (const auto& [ka, ta] : a.terms_) {
      for (const auto& [kb, tb] : b.terms_) out.add(ta.first * tb.first, Integer(ta.second * tb.second));
    }
    return out;
  }

  std::string describe() const {
    std::string out;
    for (const auto& [k, t] : terms_) {
      std::string coeff = t.second == 1 ? "" : (t.second == -1 ? "-" : t.second.get_str() + "*");
      if (!out.empty()) out += " + ";
      out += coeff + t.first.describe();
    }
    return out.empty() ? "0" : out;
  }

 private:
  void add(Atom a, const Integer& m) {
    const std::string k = a.key();
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (sgn(m) != 0) terms_.emplace(k, std::make_pair(std::move(a), m));
      return;
    }
    it->second.second += m;
    if (sgn(it->second.second) == 0) terms_.erase(it);
  }

  std::map<std::string, std::pair<Atom, Integer>> terms_;
};

}  // namespace wittzeta
