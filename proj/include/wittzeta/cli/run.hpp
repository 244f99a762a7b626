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
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include "wittzeta/io/json.hpp"
#include "wittzeta/wittzeta.hpp"

namespace wittzeta::cli {

/// Exit status with the text destined for standard output and standard error.
struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

namespace detail {

struct Config {
  std::size_t prec = 16;
  std::size_t dmax = 6;
  bool json = false;
  unsigned threads = 1;
  std::string ring = "int";
  std::string a, b, g, s, p;
  bool inv_a = false, inv_b = false, inv_g = false;
  std::optional<std::uint64_t> q;
  std::string variety, variety_b, atom, atom_b;
  std::string measure = "counting";
  std::string structure = "binomial";
  std::string kind = "fiber";
  unsigned n = 1;
  bool rationalize = false;
  bool trace = false;
  std::string series;
};

inline std::string read_text_or_file(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Coefficient conversion from a parsed polynomial into the selected ring.
struct RingSpec {
  std::string tag = "int";
  std::shared_ptr<const FiniteField> field;
};

inline RingSpec ring_spec(const std::string& tag) {
  if (tag == "int" || tag == "zu" || tag == "mpoly") return {tag, nullptr};
  if (tag.rfind("gf:", 0) == 0) {
    std::uint64_t q = 0;
    try {
      q = std::stoull(tag.substr(3));
    } catch (const std::exception&) {
      throw ParseError("bad field size in '" + tag + "'");
    }
    auto pk = prime_power(q);
    if (!pk) throw NotPrime(std::to_string(q) + " is not a prime power");
    return {"gf", make_field(pk->first, pk->second)};
  }
  throw ParseError("unknown ring '" + tag + "' (int, zu, mpoly, gf:<q>)");
}

template <class R>
R coefficient(const MPoly& c, const RingSpec& spec) {
  if constexpr (std::is_same_v<R, Integer>) {
    auto v = c.as_constant();
    if (!v) throw RingMismatch("coefficient " + c.to_string() + " is not an integer");
    return *v;
  } else if constexpr (std::is_same_v<R, IntPoly>) {
    auto v = c.as_univariate("u");
    if (!v) throw RingMismatch("coefficient " + c.to_string() + " is not a polynomial in u");
    return *v;
  } else if constexpr (std::is_same_v<R, MPoly>) {
    return c;
  } else {
    auto v = c.as_univariate("a");
    if (!v) throw RingMismatch("coefficient " + c.to_string() + " is not a polynomial in the generator a");
    const auto& f = *spec.field;
    const FiniteField::Element gen = f.degree() > 1 ? f.encode({0, 1}) : 0;
    FiniteField::Element acc = 0;
    for (long i = v->degree(); i >= 0; --i) {
      Integer r = v->coeff(static_cast<std::size_t>(i)) % Integer(static_cast<unsigned long>(f.characteristic()));
      acc = f.add(f.mul(acc, gen), f.from_int(r.get_si()));
    }
    return GFElem(spec.field, acc);
  }
}

template <class R>
R element(const std::string& text, const RingSpec& spec) {
  return coefficient<R>(parse_polynomial(text), spec);
}

/// A polynomial in t read as a truncated series, optionally inverted.
template <class R>
Series<R> series_arg(const std::string& text, bool invert, std::size_t prec, const RingSpec& spec) {
  if (text.empty()) throw ParseError("missing series argument");
  const auto parts = parse_polynomial(text).coefficients_in("t");
  std::vector<R> coeffs(prec + 1, ring_traits<R>::zero());
  for (std::size_t i = 0; i < parts.size() && i <= prec; ++i) coeffs[i] = coefficient<R>(parts[i], spec);
  Series<R> g(std::move(coeffs));
  return invert ? series_invert(g) : g;
}

template <class R>
Poly<R> poly_arg(const std::string& text, const RingSpec& spec) {
  const auto parts = parse_polynomial(text).coefficients_in("t");
  std::vector<R> coeffs;
  for (const auto& c : parts) coeffs.push_back(coefficient<R>(c, spec));
  return Poly<R>(std::move(coeffs));
}

/// "(num)/(den)" or a bare polynomial over the integers.
inline RatWitt<Integer> rational_arg(const std::string& text) {
  int depth = 0;
  std::optional<std::size_t> slash;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      if (slash) throw ParseError("more than one '/' in '" + text + "'");
      slash = i;
    }
  }
  const RingSpec spec;
  if (!slash) return RatWitt<Integer>(poly_arg<Integer>(text, spec), IntPoly::one());
  return RatWitt<Integer>(poly_arg<Integer>(text.substr(0, *slash), spec), poly_arg<Integer>(text.substr(*slash + 1), spec));
}

class Printer {
 public:
  explicit Printer(bool json) : json_(json) {}
  void text(const std::string& s) { text_ += s + "\n"; }
  void set(const std::string& key, io::Json value) { json_out_[key] = std::move(value); }
  std::string render() const { return json_ ? json_out_.dump(2) + "\n" : text_; }
  bool json() const { return json_; }

 private:
  bool json_;
  std::string text_;
  io::Json json_out_ = io::Json::object();
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + ring_traits<T>::to_string(v[i]);
  return out;
}

template <class T>
io::Json json_list(const std::vector<T>& v) {
  io::Json out = io::Json::array();
  for (const auto& x : v) out.push_back(ring_traits<T>::to_string(x));
  return out;
}

template <class F>
auto with_ring(const RingSpec& spec, F&& f) {
  if (spec.tag == "int") return f(Integer{});
  if (spec.tag == "zu") return f(IntPoly{});
  if (spec.tag == "mpoly") return f(MPoly{});
  return f(GFElem{});
}

// ---- witt ----------------------------------------------------------------

inline int witt_command(const std::string& op, const Config& c, Printer& out) {
  const RingSpec spec = ring_spec(c.ring);
  return with_ring(spec, [&](auto tag) {
    using R = decltype(tag);
    auto wa = [&] { return WittVector<R>(series_arg<R>(c.a, c.inv_a, c.prec, spec)); };
    auto wb = [&] { return WittVector<R>(series_arg<R>(c.b, c.inv_b, c.prec, spec)); };
    auto emit = [&](const WittVector<R>& w) {
      out.text(to_string(w));
      out.set("series", io::to_json(w));
    };
    if (op == "add") {
      emit(witt_add(wa(), wb()));
    } else if (op == "mul") {
      emit(witt_mul(wa(), wb()));
    } else if (op == "neg") {
      emit(witt_neg(wa()));
    } else if (op == "iota") {
      emit(lambda_involution(wa()));
    } else if (op == "teichmuller") {
      if (c.a.empty()) throw ParseError("teichmuller needs --a");
      emit(teichmuller(element<R>(c.a, spec), c.prec));
    } else {
      const auto gh = ghost(wa());
      out.text(join(gh.components));
      out.set("ghost", json_list(gh.components));
    }
    return 0;
  });
}

// ---- rat -----------------------------------------------------------------

inline int rat_command(const std::string& op, const Config& c, Printer& out) {
  if (op == "mul") {
    if (c.a.empty() || c.b.empty()) throw ParseError("rat mul needs --a and --b");
    const auto r = rat_mul(rational_arg(c.a), rational_arg(c.b));
    out.text(to_string(r));
    out.set("rational", io::to_json(r));
    return 0;
  }
  Series<Integer> g = !c.series.empty() ? io::integer_series_from_json(io::parse_json(read_text_or_file(c.series)))
                                        : series_arg<Integer>(c.a, c.inv_a, c.prec, RingSpec{});
  const auto r = rationalize(WittVector<Integer>(std::move(g)), c.dmax);
  if (!r) {
    out.text("NOT FOUND (dmax " + std::to_string(c.dmax) + ")");
    out.set("rational", nullptr);
    return 1;
  }
  out.text(to_string(*r));
  out.set("rational", io::to_json(*r));
  return 0;
}

// ---- classes and measures --------------------------------------------------

inline K0Class class_arg(const std::string& variety, const std::string& atom, const Config& c) {
  if (!variety.empty() && !atom.empty()) throw ParseError("give a variety or a symbolic atom, not both");
  if (!variety.empty()) {
    if (variety == "point") {
      if (!c.q) return K0Class::point();
      auto pk = prime_power(*c.q);
      if (!pk) throw NotPrime(std::to_string(*c.q) + " is not a prime power");
      return K0Class(Atom(VarietyDesc::point(pk->first, pk->second)));
    }
    return K0Class(Atom(io::variety_from_json(io::parse_json(read_text_or_file(variety)), c.q)));
  }
  if (!atom.empty()) return K0Class(Atom(io::symbolic_atom_from_json(io::parse_json(read_text_or_file(atom)))));
  throw ParseError("missing class: pass --variety or --atom");
}

template <class F>
int with_measure(const Config& c, F&& f) {
  if (c.measure == "counting") return f(CountingMeasure(CountOptions{c.threads}));
  if (c.measure == "euler") return f(EulerMeasure{});
  if (c.measure == "poincare") return f(PoincareMeasure{});
  throw ParseError("unknown measure '" + c.measure + "' (counting, euler, poincare)");
}

inline int emit_verdict(const Verdict& v, Printer& out) {
  out.text(v.to_string());
  out.set("verdict", io::to_json(v));
  return v.holds ? 0 : 1;
}

inline int emit_report(const Report& r, Printer& out) {
  for (const auto& v : r.checks) out.text(v.identity + ": " + v.to_string());
  out.text(r.to_string());
  out.set("report", io::to_json(r));
  return r.holds() ? 0 : 1;
}

// ---- zeta ----------------------------------------------------------------

inline int zeta_command(const std::string& op, const Config& c, Printer& out) {
  if (c.rationalize && 2 * c.dmax >= c.prec) {
    throw PrecisionTooLow("rationalization at dmax " + std::to_string(c.dmax) + " needs precision above " +
                          std::to_string(2 * c.dmax));
  }
  auto finish = [&](const auto& series) {
    using R = std::decay_t<decltype(series[0])>;
    if (!c.rationalize) {
      out.text(to_string(series));
      out.set("series", io::to_json(series));
      return 0;
    }
    if constexpr (std::is_same_v<R, Integer>) {
      const auto r = rationalize(series, c.dmax);
      if (!r) {
        out.text("NOT FOUND (dmax " + std::to_string(c.dmax) + ")");
        out.set("rational", nullptr);
        return 1;
      }
      out.text(to_string(*r));
      out.set("rational", io::to_json(*r));
      return 0;
    } else {
      throw UnsupportedClass("rationalization is implemented for integer zeta functions");
      return 2;
    }
  };
  if (op == "weil") {
    if (c.variety.empty()) throw ParseError("zeta weil needs --variety");
    const Atom atom = *class_arg(c.variety, "", c).single_atom();
    const auto* v = atom.variety();
    if (!v) return finish(WittVector<Integer>::unit(c.prec));
    return finish(weil_zeta(*v, c.prec, CountOptions{c.threads}));
  }
  const auto x = class_arg(c.variety, c.atom, c);
  return with_measure(c, [&](const auto& mu) { return finish(kapranov_zeta(mu, x, c.prec).series); });
}

// ---- check ---------------------------------------------------------------

template <class R>
int lambda_axioms(const Config& c, Printer& out, const auto& structure) {
  if (c.a.empty() || c.b.empty()) throw ParseError("lambda-axioms needs --a and --b");
  const RingSpec spec;
  return emit_report(check_lambda_additivity(structure, element<R>(c.a, spec), element<R>(c.b, spec), c.prec), out);
}

inline int check_command(const std::string& op, const Config& c, Printer& out) {
  if (op == "lambda-axioms") {
    if (c.structure == "binomial") return lambda_axioms<Integer>(c, out, BinomialStructure{});
    if (c.structure == "plethystic") return lambda_axioms<IntPoly>(c, out, PlethysticStructure{});
    throw ParseError("unknown structure '" + c.structure + "' (binomial, plethystic)");
  }
  if (op == "gident") {
    if (c.g.empty() || c.s.empty() || c.p.empty()) throw ParseError("gident needs --g, --s and --p");
    const RingSpec spec{"mpoly", nullptr};
    const WittVector<MPoly> g(series_arg<MPoly>(c.g, c.inv_g, c.prec, spec));
    const auto poly = poly_arg<MPoly>(c.p, spec);
    if (!(poly.coeff(0) == MPoly(1))) throw NonUnitConstantTerm("P must have constant term 1");
    return emit_verdict(g_witt_identity_check(g, element<MPoly>(c.s, spec), poly, c.prec), out);
  }
  const auto x = class_arg(c.variety, c.atom, c);
  return with_measure(c, [&](const auto& mu) {
    if (op == "expo") return emit_verdict(check_exponentiation(mu, x, class_arg(c.variety_b, c.atom_b, c), c.prec), out);
    if (op == "totaro") {
      if (c.trace) return emit_report(totaro_proof_trace(mu, x, c.n, c.prec), out);
      return emit_verdict(totaro_check(mu, x, c.n, c.prec), out);
    }
    if (c.kind != "fiber" && c.kind != "projective") throw ParseError("unknown bundle kind '" + c.kind + "'");
    const auto kind = c.kind == "fiber" ? BundleKind::Fiber : BundleKind::Projective;
    return emit_verdict(bundle_zeta_check(mu, x, c.n, c.prec, kind), out);
  });
}

// ---- count ---------------------------------------------------------------

inline int count_command(const std::string& op, const Config& c, Printer& out) {
  if (c.variety.empty()) throw ParseError("count needs --variety");
  const Atom atom = *class_arg(c.variety, "", c).single_atom();
  const auto* v = atom.variety();
  if (!v) throw UnsupportedClass("count needs an equation-defined variety over a finite field");
  const CountOptions opts{c.threads};
  std::vector<Integer> values;
  if (op == "points") {
    values = point_counts(*v, c.prec, opts);
  } else if (op == "census") {
    values = closed_point_census(*v, c.prec, opts);
  } else {
    values = sym_product_counts(*v, c.prec, opts);
  }
  out.text(join(values));
  out.set(op, json_list(values));
  return 0;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline Outcome run(const std::vector<std::string>& args) {
  detail::Config c;
  CLI::App app{"Exact big Witt vector arithmetic and Kapranov zeta functions", "wittzeta"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prec", c.prec, "truncation precision N")->check(CLI::PositiveNumber);
    sub->add_flag("--json", c.json, "JSON output");
  };
  auto field = [&](CLI::App* sub) {
    sub->add_option("--q", c.q, "field size, overriding the variety's p and k");
    sub->add_option("--threads", c.threads, "enumeration threads")->check(CLI::PositiveNumber);
  };
  auto klass = [&](CLI::App* sub) {
    sub->add_option("--measure", c.measure, "counting, euler or poincare");
    sub->add_option("--variety", c.variety, "variety JSON (file or inline), or 'point'");
    sub->add_option("--atom", c.atom, "symbolic atom JSON (file or inline)");
    field(sub);
  };

  std::string chosen;
  std::vector<std::pair<CLI::App*, std::function<int(const std::string&, const detail::Config&, detail::Printer&)>>>
      groups;
  auto group = [&](const std::string& name, const std::string& help,
                   std::function<int(const std::string&, const detail::Config&, detail::Printer&)> fn,
                   const std::vector<std::string>& ops) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    std::vector<CLI::App*> subs;
    for (const auto& op : ops) subs.push_back(g->add_subcommand(op));
    groups.emplace_back(g, std::move(fn));
    return subs;
  };

  for (auto* sub : group("witt", "big Witt vector arithmetic", detail::witt_command,
                         {"add", "mul", "neg", "teichmuller", "ghost", "iota"})) {
    common(sub);
    sub->add_option("--ring", c.ring, "coefficient ring: int, zu, mpoly, gf:<q>");
    sub->add_option("--a", c.a, "first operand (polynomial in t; element for teichmuller)");
    sub->add_option("--b", c.b, "second operand (polynomial in t)");
    sub->add_flag("--inv-a", c.inv_a, "use the inverse series of --a");
    sub->add_flag("--inv-b", c.inv_b, "use the inverse series of --b");
  }
  for (auto* sub : group("rat", "rational Witt vectors", detail::rat_command, {"mul", "rationalize"})) {
    common(sub);
    sub->add_option("--a", c.a, "'(num)/(den)' for mul; polynomial in t for rationalize");
    sub->add_option("--b", c.b, "'(num)/(den)'");
    sub->add_flag("--inv-a", c.inv_a, "use the inverse series of --a");
    sub->add_option("--series", c.series, "series JSON (file or inline) for rationalize");
    sub->add_option("--dmax", c.dmax, "degree bound");
  }
  for (auto* sub : group("zeta", "zeta functions", detail::zeta_command, {"weil", "kapranov"})) {
    common(sub);
    klass(sub);
    sub->add_flag("--rationalize", c.rationalize, "reconstruct as a rational function");
    sub->add_option("--dmax", c.dmax, "degree bound");
  }
  auto check_subs =
      group("check", "identity checks", detail::check_command, {"expo", "totaro", "bundle", "gident", "lambda-axioms"});
  for (auto* sub : check_subs) common(sub);
  for (std::size_t i = 0; i < 3; ++i) {
    auto* sub = check_subs[i];
    klass(sub);
    sub->add_option("--n", c.n, "exponent n of A^n or P^n");
  }
  check_subs[0]->add_option("--variety-b", c.variety_b, "second variety");
  check_subs[0]->add_option("--atom-b", c.atom_b, "second symbolic atom");
  check_subs[1]->add_flag("--trace", c.trace, "check each link of the proof");
  check_subs[2]->add_option("--kind", c.kind, "fiber or projective");
  check_subs[3]->add_option("--g", c.g, "g as a polynomial in t over Z[symbols]");
  check_subs[3]->add_flag("--inv-g", c.inv_g, "use the inverse series of --g");
  check_subs[3]->add_option("--s", c.s, "the twisting value s");
  check_subs[3]->add_option("--p", c.p, "P as a polynomial in t with P(0) = 1");
  check_subs[4]->add_option("--structure", c.structure, "binomial or plethystic");
  check_subs[4]->add_option("--a", c.a, "first element");
  check_subs[4]->add_option("--b", c.b, "second element");
  for (auto* sub : group("count", "point counting", detail::count_command, {"points", "census", "sym"})) {
    common(sub);
    sub->add_option("--variety", c.variety, "variety JSON (file or inline)");
    field(sub);
  }

  Outcome result;
  std::ostringstream out, err;
  std::vector<std::string> argv_store{"wittzeta"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.code = code == 0 ? 0 : 2;
    return result;
  }

  detail::Printer printer(c.json);
  try {
    if (c.q && *c.q < 2) throw NotPrime("field size must be a prime power");
    for (const auto& [g, fn] : groups) {
      if (!g->parsed()) continue;
      for (auto* sub : g->get_subcommands()) result.code = fn(sub->get_name(), c, printer);
    }
    result.out = printer.render();
  } catch (const Error& e) {
    result.code = 2;
    result.err = std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    result.code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace wittzeta::cli
