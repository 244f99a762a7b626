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


#include <gtest/gtest.h>

#include "support.hpp"

namespace wittzeta {
namespace {

using namespace testing;

TEST(SeriesInvert, GeometricSeries) {
  EXPECT_EQ(series_invert(int_series({1, -1, 0, 0})), int_series({1, 1, 1, 1}));
}

TEST(SeriesInvert, One) { EXPECT_EQ(series_invert(Series<Integer>::one(4)), Series<Integer>::one(4)); }

TEST(SeriesInvert, SquareOfOnePlusT) {
  EXPECT_EQ(series_invert(int_series({1, 2, 1})), int_series({1, -2, 3}));
}

TEST(SeriesInvert, MinusOneConstantTerm) {
  EXPECT_EQ(series_invert(int_series({-1, 1, 0})), int_series({-1, -1, -1}));
}

TEST(SeriesInvert, NonUnitThrows) {
  EXPECT_THROW(series_invert(int_series({2, 1})), NonUnitConstantTerm);
  EXPECT_THROW(series_invert(int_series({0, 1})), NonUnitConstantTerm);
}

TEST(SeriesInvert, DoubleInverseIsIdentity) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    for (std::size_t n = 0; n <= 16; n += 4) {
      const auto g = random_witt(rng, n).series();
      EXPECT_EQ(series_invert(series_invert(g)), g);
      EXPECT_EQ(g * series_invert(g), Series<Integer>::one(n));
    }
  }
}

TEST(Series, MixedPrecisionIsAnError) {
  EXPECT_THROW(int_series({1, 1}) * int_series({1, 1, 1}), PrecisionMismatch);
  EXPECT_THROW(int_series({1, 1}) + int_series({1}), PrecisionMismatch);
}

TEST(Series, Rendering) {
  EXPECT_EQ(to_string(int_series({1, 3, 9})), "1 + 3*t + 9*t^2 + O(t^3)");
  EXPECT_EQ(to_string(int_series({1, -1})), "1 - t + O(t^2)");
  EXPECT_EQ(to_string(int_series({1})), "1 + O(t)");
}

TEST(Series, NegativeBinomial) {
  EXPECT_EQ(negative_binomial_coefficients(Integer(3), 3), ints({1, 3, 6, 10}));
  EXPECT_EQ(negative_binomial_coefficients(Integer(-2), 4), ints({1, -2, 1, 0, 0}));
  EXPECT_EQ(negative_binomial_coefficients(Integer(0), 2), ints({1, 0, 0}));
}

TEST(Resultant, TwoByTwo) {
  EXPECT_EQ(resultant(ipoly({-2, 1}), ipoly({1, -3})), Integer(-5));
}

TEST(Resultant, ConstantSecondArgument) {
  EXPECT_EQ(resultant(ipoly({1, 2, 3}), ipoly({1})), Integer(1));
}

TEST(Resultant, LinearFactors) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Integer a = random_integer(rng), b = random_integer(rng);
    EXPECT_EQ(resultant(IntPoly{Integer(-a), Integer(1)}, IntPoly{Integer(-b), Integer(1)}), Integer(a - b));
  }
}

TEST(Resultant, ZeroPolynomialThrows) {
  EXPECT_THROW(resultant(IntPoly(), ipoly({1, 1})), ZeroPolynomial);
}

TEST(Resultant, SwapSign) {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto f = random_upoly(rng, 4, 5), g = random_upoly(rng, 4, 5);
    if (f.is_zero() || g.is_zero()) continue;
    const int sign = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(resultant(f, g), Integer(sign * resultant(g, f)));
  }
}

TEST(Resultant, ProductOfValuesAtRoots) {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    IntPoly f = IntPoly::one();
    std::vector<Integer> roots;
    const int d = static_cast<int>(uniform(rng, 1, 4));
    for (int j = 0; j < d; ++j) {
      roots.push_back(random_integer(rng, -4, 4));
      f = f * IntPoly{Integer(-roots.back()), Integer(1)};
    }
    const auto g = random_upoly(rng, 4, 5);
    if (g.is_zero()) continue;
    Integer expected = 1;
    for (const auto& r : roots) expected *= g(r);
    EXPECT_EQ(resultant(f, g), expected);
  }
}

TEST(Resultant, DeterminantOverPolynomials) {
  // det [[1, -2], [-3t, 1]] over Z[t] via Bareiss without fractions.
  const Matrix<IntPoly> m{{IntPoly::one(), ipoly({-2})}, {ipoly({0, -3}), IntPoly::one()}};
  EXPECT_EQ(determinant(m), ipoly({1, -6}));
}

TEST(FiniteFieldConstruction, Moduli) {
  EXPECT_EQ(make_field(2, 1)->modulus(), (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(make_field(2, 2)->modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(make_field(3, 2)->modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(make_field(2, 3)->modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
}

TEST(FiniteFieldConstruction, Errors) {
  EXPECT_THROW(make_field(4, 1), NotPrime);
  EXPECT_THROW(make_field(1, 1), NotPrime);
  EXPECT_THROW(make_field(5, 0), DegreeZero);
}

TEST(FiniteFieldConstruction, Deterministic) {
  EXPECT_EQ(FiniteField(5, 3).modulus(), FiniteField(5, 3).modulus());
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint64_t, unsigned>> {};

TEST_P(FieldAxioms, Exhaustive) {
  const auto [p, k] = GetParam();
  const FiniteField f(p, k);
  const std::uint64_t q = f.size();
  // Table arithmetic against schoolbook polynomial arithmetic.
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      const auto prod = f.encode(detail::mul_mod(f.digits(a), f.digits(b), f.modulus(), p));
      ASSERT_EQ(f.mul(a, b), prod);
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
    }
  }
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      for (std::uint64_t c = 0; c < q; ++c) {
        ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    if (a != 0) {
      const auto inv = f.inv(a);
      ASSERT_TRUE(inv.has_value());
      ASSERT_EQ(f.mul(a, *inv), 1u);
    }
  }
  EXPECT_FALSE(f.inv(0).has_value());
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      ASSERT_EQ(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
  std::uint64_t squares = 0;
  for (std::uint64_t a = 1; a < q; ++a) squares += f.is_square(a) ? 1 : 0;
  EXPECT_EQ(squares, p == 2 ? q - 1 : (q - 1) / 2);
}

std::vector<std::pair<std::uint64_t, unsigned>> small_fields() {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    std::uint64_t q = p;
    for (unsigned k = 1; q <= 64; ++k, q *= p) out.emplace_back(p, k);
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(AllUpTo64, FieldAxioms, ::testing::ValuesIn(small_fields()),
                         [](const auto& info) {
                           return "F" + std::to_string(info.param.first) + "_" + std::to_string(info.param.second);
                         });

TEST(FiniteFieldElements, GFElemArithmetic) {
  const auto f = make_field(3, 2);
  const GFElem a(f, 3);  // the generator, a^2 = -1
  EXPECT_EQ(a * a, GFElem(-1));
  EXPECT_EQ((a * a).to_string(), "2");
  EXPECT_EQ(a.to_string(), "a");
  EXPECT_EQ((a + GFElem(1)).to_string(), "1 + a");
  EXPECT_THROW(GFElem(f, 1) + GFElem(make_field(5, 1), 1), RingMismatch);
}

TEST(FiniteFieldElements, LargeFieldWithoutTables) {
  const FiniteField f(2, 23);
  EXPECT_FALSE(f.has_tables());
  const FiniteField::Element x = 12345;
  EXPECT_EQ(f.mul(x, *f.inv(x)), 1u);
  EXPECT_EQ(f.pow(x, f.size() - 1), 1u);
  EXPECT_EQ(f.trace(1), 1u);
}

TEST(Polynomial, Basics) {
  const auto f = ipoly({1, -2, 1});
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ(ipoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(f(Integer(1)), Integer(0));
  EXPECT_EQ(ipoly({-1, 1}) * ipoly({-1, 1}), f);
  EXPECT_EQ(to_string(f, "t"), "1 - 2*t + t^2");
  EXPECT_EQ(to_string(IntPoly(), "t"), "0");
}

TEST(Polynomial, IntegerGcd) {
  const auto a = ipoly({1, -1}) * ipoly({1, 2}), b = ipoly({1, -1}) * ipoly({1, 0, 3});
  const auto g = gcd(a, b);
  ASSERT_EQ(g.degree(), 1);
  EXPECT_TRUE(g == ipoly({1, -1}) || g == ipoly({-1, 1}));
  EXPECT_EQ(gcd(ipoly({2, 4}), ipoly({3, 6})).degree(), 1);
  EXPECT_EQ(gcd(ipoly({1, 1}), ipoly({1, 2})).degree(), 0);
  EXPECT_EQ(content(ipoly({4, -6, 8})), Integer(2));
}

TEST(Polynomial, ExactDivision) {
  const auto a = ipoly({1, -1}) * ipoly({2, 3});
  EXPECT_EQ(divide_exact(a, ipoly({1, -1})), ipoly({2, 3}));
  EXPECT_FALSE(divide_exact(ipoly({1, 1}), ipoly({1, 2})).has_value());
}

TEST(Parse, Canonical) {
  EXPECT_EQ(parse_polynomial("1-2*t+3*t^2").to_string(), "1 - 2*t + 3*t^2");
  EXPECT_EQ(parse_polynomial("(x+y)^2").to_string(), parse_polynomial("x^2+2*x*y+y^2").to_string());
  EXPECT_EQ(parse_polynomial("-(x - 1)").to_string(), "1 - x");
  EXPECT_EQ(parse_polynomial("x - x"), MPoly());
  EXPECT_EQ(parse_polynomial("x2*x10 - 3"), parse_polynomial("-3 + x10*x2"));
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "x +", "2/3", "(x", "x^y", "X", "x^-1", "x y"}) {
    EXPECT_THROW(parse_polynomial(bad), ParseError) << bad;
  }
}

TEST(MultivariatePolynomial, RingOperations) {
  const auto a = P("x + y"), b = P("x - y");
  EXPECT_EQ(a * b, P("x^2 - y^2"));
  EXPECT_EQ(a + b, P("2*x"));
  EXPECT_EQ(a - a, MPoly());
  EXPECT_EQ(P("x^2*y + 3").total_degree(), 3);
  EXPECT_EQ(P("x^2*y + 3").degree_in("x"), 2);
  EXPECT_TRUE(P("x^2 + x*y").is_homogeneous_in({"x", "y"}));
  EXPECT_FALSE(P("x^2 + y").is_homogeneous_in({"x", "y"}));
  EXPECT_EQ(MPoly::exact_quotient(P("x^2 - y^2"), P("x + y")), P("x - y"));
  EXPECT_FALSE(MPoly::exact_quotient(P("x^2 + 1"), P("x + 1")).has_value());
  const auto parts = P("1 + a*t + b*t^2").coefficients_in("t");
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[2], P("b"));
}

}  // namespace
}  // namespace wittzeta
