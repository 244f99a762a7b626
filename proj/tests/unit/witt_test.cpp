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

WittVector<Integer> inv_linear(long a, std::size_t n) { return teichmuller(Integer(a), n); }

TEST(WittVector, ConstantTermMustBeOne) {
  EXPECT_THROW(int_witt({2, 1}), NonUnitConstantTerm);
  EXPECT_NO_THROW(int_witt({1, 7}));
}

TEST(WittAdd, TeichmullerSum) {
  const auto lhs = witt_add(inv_linear(2, 6), inv_linear(3, 6));
  EXPECT_EQ(lhs.series(), series_invert(Series<Integer>::from_poly(ipoly({1, -5, 6}), 6)));
}

TEST(WittAdd, ZeroIsOne) {
  Rng rng(1);
  const auto g = random_witt(rng, 8);
  EXPECT_EQ(witt_add(g, WittVector<Integer>::zero(8)), g);
}

TEST(WittAdd, PolynomialProduct) { EXPECT_EQ(witt_add(int_witt({1, 1, 0, 0}), int_witt({1, -1, 0, 0})), int_witt({1, 0, -1, 0})); }

TEST(WittAdd, PrecisionMismatch) { EXPECT_THROW(witt_add(int_witt({1, 1}), int_witt({1, 1, 1})), PrecisionMismatch); }

TEST(WittNeg, Examples) {
  EXPECT_EQ(witt_neg(int_witt({1, -1, 0, 0, 0})), int_witt({1, 1, 1, 1, 1}));
  EXPECT_EQ(witt_neg(WittVector<Integer>::zero(5)), WittVector<Integer>::zero(5));
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_witt(rng, 10);
    EXPECT_EQ(witt_neg(witt_neg(g)), g);
    EXPECT_EQ(witt_add(g, witt_neg(g)), WittVector<Integer>::zero(10));
  }
}

TEST(Ghost, OfTeichmuller) {
  const auto a = P("a");
  const auto gh = ghost(teichmuller(a, 4));
  ASSERT_EQ(gh.precision(), 4u);
  EXPECT_EQ(gh[1], a);
  EXPECT_EQ(gh[2], a * a);
  EXPECT_EQ(gh[4], a * a * a * a);
}

TEST(Ghost, OfZeroAndUnit) {
  EXPECT_EQ(ghost(WittVector<Integer>::zero(5)).components, std::vector<Integer>(5, Integer(0)));
  EXPECT_EQ(ghost(WittVector<Integer>::unit(5)).components, std::vector<Integer>(5, Integer(1)));
}

TEST(Ghost, RecurrenceByHand) {
  // 1 + 2t + 3t^2: p1 = 2, p2 = 2*3 - 2*2 = 2.
  EXPECT_EQ(ghost(int_witt({1, 2, 3})).components, ints({2, 2}));
}

TEST(Ghost, Homomorphism) {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto g = random_witt(rng, 10), h = random_witt(rng, 10);
    EXPECT_EQ(ghost(witt_add(g, h)), ghost(g) + ghost(h));
    EXPECT_EQ(ghost(witt_mul(g, h)), ghost(g) * ghost(h));
    EXPECT_EQ(from_ghost(ghost(g)), g);
  }
}

TEST(FromGhost, Examples) {
  const auto a = P("a");
  EXPECT_EQ(from_ghost(GhostVector<MPoly>{{a, a * a, a * a * a}}), teichmuller(a, 3));
  EXPECT_EQ(from_ghost(GhostVector<Integer>{ints({0, 0, 0})}), WittVector<Integer>::zero(3));
  EXPECT_EQ(from_ghost(GhostVector<Integer>{ints({1, 1, 1, 1})}), WittVector<Integer>::unit(4));
}

TEST(FromGhost, NonIntegral) {
  EXPECT_THROW(from_ghost(GhostVector<Integer>{ints({1, 0})}), NonIntegral);
  EXPECT_THROW(from_ghost(GhostVector<IntPoly>{{ipoly({0, 1}), IntPoly()}}), NonIntegral);
}

TEST(FromGhost, RationalCoefficients) {
  const GhostVector<Rational> ps{{Rational(1), Rational(0)}};
  const auto w = from_ghost(ps);
  EXPECT_EQ(w[2], Rational(1, 2));
}

TEST(WittMul, Examples) {
  EXPECT_EQ(witt_mul(inv_linear(2, 6), inv_linear(3, 6)), inv_linear(6, 6));
  EXPECT_EQ(witt_mul(int_witt({1, 1, 0, 0, 0}), int_witt({1, 1, 0, 0, 0})), WittVector<Integer>::unit(4));
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_witt(rng, 8);
    EXPECT_EQ(witt_mul(g, WittVector<Integer>::unit(8)), g);
    EXPECT_EQ(witt_mul(g, WittVector<Integer>::zero(8)), WittVector<Integer>::zero(8));
  }
}

TEST(WittMul, TorsionRingsRejected) {
  const auto f = make_field(3, 1);
  const WittVector<GFElem> g(std::vector<GFElem>{GFElem(1), GFElem(f, 2)});
  EXPECT_THROW(witt_mul(g, g), TorsionUnsupported);
  EXPECT_NO_THROW(witt_add(g, g));
}

TEST(WittMul, SymbolicBilinear) {
  // [a] * [b] = [ab] with indeterminates.
  EXPECT_EQ(witt_mul(teichmuller(P("a"), 5), teichmuller(P("b"), 5)), teichmuller(P("a*b"), 5));
}

TEST(Teichmuller, Examples) {
  EXPECT_EQ(teichmuller(Integer(0), 5), WittVector<Integer>::zero(5));
  EXPECT_EQ(teichmuller(Integer(1), 5), WittVector<Integer>::unit(5));
  EXPECT_EQ(teichmuller(Integer(3), 3), int_witt({1, 3, 9, 27}));
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_integer(rng, -9, 9), b = random_integer(rng, -9, 9);
    EXPECT_EQ(witt_mul(teichmuller(a, 8), teichmuller(b, 8)), teichmuller(Integer(a * b), 8));
  }
}

TEST(Twist, Examples) {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_witt(rng, 8);
    const auto a = random_integer(rng, -4, 4);
    EXPECT_EQ(twist(g, Integer(1)), g);
    EXPECT_EQ(twist(g, Integer(0)), WittVector<Integer>::zero(8));
    EXPECT_EQ(twist(g, a), witt_mul(g, teichmuller(a, 8)));
  }
  EXPECT_EQ(twist(int_witt({1, 1, 1}), Integer(2)), int_witt({1, 2, 4}));
}

TEST(Involution, Examples) {
  EXPECT_EQ(lambda_involution(int_witt({1, 1, 0, 0})), WittVector<Integer>::unit(3));
  EXPECT_EQ(lambda_involution(WittVector<Integer>::zero(4)), WittVector<Integer>::zero(4));
  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    const auto g = random_witt(rng, 10), h = random_witt(rng, 10);
    EXPECT_EQ(lambda_involution(lambda_involution(g)), g);
    EXPECT_EQ(lambda_involution(witt_add(g, h)), witt_add(lambda_involution(g), lambda_involution(h)));
  }
}

TEST(WittPower, RepeatedProduct) {
  const auto g = int_witt({1, 2, -1, 3});
  EXPECT_EQ(witt_power(g, 0), WittVector<Integer>::unit(3));
  EXPECT_EQ(witt_power(g, 3), witt_mul(g, witt_mul(g, g)));
}

TEST(WittRing, AxiomsOverZu) {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_witt_u(rng, 8), b = random_witt_u(rng, 8), c = random_witt_u(rng, 8);
    EXPECT_EQ(witt_mul(a, witt_add(b, c)), witt_add(witt_mul(a, b), witt_mul(a, c)));
    EXPECT_EQ(witt_mul(witt_mul(a, b), c), witt_mul(a, witt_mul(b, c)));
    EXPECT_EQ(witt_mul(a, b), witt_mul(b, a));
  }
}

TEST(RatStar, Examples) {
  EXPECT_EQ(rat_star(ipoly({1, -2}), ipoly({1, -3})), ipoly({1, -6}));
  EXPECT_EQ(rat_star(ipoly({1, 5, 2}), IntPoly::one()), IntPoly::one());
  EXPECT_EQ(rat_star(ipoly({1, 0, -1}), ipoly({1, -2})), ipoly({1, 0, -4}));
  const auto lhs = witt_mul(RatWitt<Integer>(IntPoly::one(), ipoly({1, 0, -1})).expansion(8),
                            RatWitt<Integer>(IntPoly::one(), ipoly({1, -2})).expansion(8));
  EXPECT_EQ(lhs, RatWitt<Integer>(IntPoly::one(), ipoly({1, 0, -4})).expansion(8));
}

TEST(RatStar, NonUnitInput) { EXPECT_THROW(rat_star(ipoly({2, 1}), ipoly({1, 1})), NonUnitConstantTerm); }

TEST(RatWitt, Invariants) {
  EXPECT_THROW(RatWitt<Integer>(ipoly({2}), IntPoly::one()), NonUnitConstantTerm);
  const RatWitt<Integer> f(ipoly({1, -1}) * ipoly({1, 2}), ipoly({1, -1}) * ipoly({1, 3}));
  EXPECT_EQ(f.numerator(), ipoly({1, 2}));
  EXPECT_EQ(f.denominator(), ipoly({1, 3}));
  EXPECT_EQ(to_string(RatWitt<Integer>(ipoly({1, -1}), ipoly({1, -2}))), "(1 - t)/(1 - 2*t)");
}

TEST(RatWitt, UnreducedOverZu) {
  const IntPoly one = IntPoly::one(), u = ipoly({0, 1});
  const RatWitt<IntPoly> f(Poly<IntPoly>{one, u}, Poly<IntPoly>{one, u});
  EXPECT_EQ(f.numerator().degree(), 1);
  EXPECT_EQ(f, RatWitt<IntPoly>::zero());
}

TEST(RatMul, Examples) {
  using RW = RatWitt<Integer>;
  const auto one = IntPoly::one();
  EXPECT_EQ(rat_mul(RW(one, ipoly({1, -2})), RW(one, ipoly({1, -3}))), RW(one, ipoly({1, -6})));
  // (-_W [2]) * (-_W [3]) = [6].
  EXPECT_EQ(rat_mul(RW(ipoly({1, -2}), one), RW(ipoly({1, -3}), one)), RW(one, ipoly({1, -6})));
  EXPECT_EQ(witt_mul(RW(ipoly({1, -2}), one).expansion(6), RW(ipoly({1, -3}), one).expansion(6)),
            RW(one, ipoly({1, -6})).expansion(6));
  const RW f(ipoly({1, 2, -1}), ipoly({1, 0, 3}));
  EXPECT_EQ(rat_mul(f, RW::unit()), f);
}

TEST(RatMul, MatchesSeriesProduct) {
  Rng rng(9);
  for (int i = 0; i < 25; ++i) {
    const RatWitt<Integer> f(random_unit_poly(rng, 3, 3), random_unit_poly(rng, 3, 3));
    const RatWitt<Integer> g(random_unit_poly(rng, 3, 3), random_unit_poly(rng, 3, 3));
    EXPECT_EQ(rat_mul(f, g).expansion(20), witt_mul(f.expansion(20), g.expansion(20)));
  }
}

TEST(RatMul, OverZu) {
  const IntPoly one = IntPoly::one(), u = ipoly({0, 1});
  const RatWitt<IntPoly> f(Poly<IntPoly>{one}, Poly<IntPoly>{one, IntPoly(-u)});
  const RatWitt<IntPoly> g(Poly<IntPoly>{one, u}, Poly<IntPoly>{one});
  EXPECT_EQ(rat_mul(f, g).expansion(8), witt_mul(f.expansion(8), g.expansion(8)));
}

TEST(RatAdd, Examples) {
  using RW = RatWitt<Integer>;
  const auto one = IntPoly::one();
  EXPECT_EQ(rat_add(RW(ipoly({1, -1}), one), RW(one, ipoly({1, -1}))), RW::zero());
  EXPECT_EQ(rat_neg(RW(ipoly({1, 2}), ipoly({1, 3}))), RW(ipoly({1, 3}), ipoly({1, 2})));
  Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    const RW f(random_unit_poly(rng, 3, 3), random_unit_poly(rng, 3, 3));
    const RW g(random_unit_poly(rng, 3, 3), random_unit_poly(rng, 3, 3));
    EXPECT_EQ(rat_add(f, g).expansion(12), witt_add(f.expansion(12), g.expansion(12)));
  }
}

TEST(Rationalize, Examples) {
  using RW = RatWitt<Integer>;
  const auto one = IntPoly::one();
  EXPECT_EQ(rationalize(WittVector<Integer>::unit(6), 1), RW(one, ipoly({1, -1})));
  const auto target = RW(one, ipoly({1, -1}) * ipoly({1, -3})).expansion(8);
  EXPECT_EQ(target, int_witt({1, 4, 13, 40, 121, 364, 1093, 3280, 9841}));
  EXPECT_EQ(rationalize(target, 2), RW(one, ipoly({1, -4, 3})));
  EXPECT_EQ(rationalize(int_witt({1, 1, 2, 3, 5, 8, 13, 21, 34}), 2), RW(one, ipoly({1, -1, -1})));
}

TEST(Rationalize, MinimalDenominatorFirst) {
  // A polynomial is found with denominator 1.
  EXPECT_EQ(rationalize(int_witt({1, 2, 1, 0, 0, 0, 0}), 2), RatWitt<Integer>(ipoly({1, 2, 1}), IntPoly::one()));
}

TEST(Rationalize, NotFoundAndPrecision) {
  // Coefficients 1, 1, 2, 6, 24, ... are not rational at low degree.
  EXPECT_FALSE(rationalize(int_witt({1, 1, 2, 6, 24, 120, 720}), 2).has_value());
  EXPECT_THROW(rationalize(int_witt({1, 1, 1, 1}), 2), PrecisionTooLow);
}

TEST(Rationalize, RecoversExpansions) {
  Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    const RatWitt<Integer> f(random_unit_poly(rng, 3, 3), random_unit_poly(rng, 3, 3));
    const auto r = rationalize(f.expansion(16), 3);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, f);
  }
}

TEST(Rationalize, OverZu) {
  const IntPoly one = IntPoly::one(), u = ipoly({0, 1});
  const RatWitt<IntPoly> f(Poly<IntPoly>{one}, Poly<IntPoly>{one, IntPoly(-one - u)} * Poly<IntPoly>{one, IntPoly(-u)});
  const auto r = rationalize(f.expansion(9), 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, f);
}

}  // namespace
}  // namespace wittzeta
