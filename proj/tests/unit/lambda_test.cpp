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

const BinomialStructure kBinomial;
const PlethysticStructure kPlethystic;

Integer binomial(long m, unsigned long n) {
  // Generalized C(m, n) = m (m - 1) ... (m - n + 1) / n!.
  Integer num = 1, den = 1;
  for (unsigned long i = 0; i < n; ++i) {
    num *= Integer(m - static_cast<long>(i));
    den *= Integer(static_cast<long>(i + 1));
  }
  return Integer(num / den);
}

TEST(Binomial, SigmaOfOneIsWittUnit) { EXPECT_EQ(sigma_t(kBinomial, Integer(1), 8), WittVector<Integer>::unit(8)); }

TEST(Binomial, SigmaTwoOfThree) { EXPECT_EQ(kBinomial.sigma_n(Integer(3), 2), Integer(6)); }

TEST(Binomial, MatchesEulerClosedForm) {
  const auto one_minus_t = Series<Integer>::from_poly(ipoly({1, -1}), 10);
  for (long chi = -5; chi <= 5; ++chi) {
    EXPECT_EQ(sigma_t(kBinomial, Integer(chi), 10).series(), series_power(one_minus_t, -chi)) << chi;
  }
}

TEST(Binomial, LambdaIsBinomialCoefficients) {
  for (long m = -4; m <= 4; ++m) {
    const auto l = lambda_t(kBinomial, Integer(m), 6);
    for (unsigned long n = 0; n <= 6; ++n) EXPECT_EQ(l[n], binomial(m, n)) << m << " " << n;
  }
}

TEST(Plethystic, SigmaOfMonomialIsTeichmuller) {
  EXPECT_EQ(sigma_t(kPlethystic, ipoly({0, 1}), 6), teichmuller(ipoly({0, 1}), 6));
}

TEST(Plethystic, TeichmullerPowers) {
  for (long c = -3; c <= 3; ++c) {
    for (std::size_t r = 0; r <= 4; ++r) {
      const auto ur = IntPoly::monomial(Integer(1), r);
      const auto expected = series_power(teichmuller(ur, 8).series(), c);
      EXPECT_EQ(sigma_t(kPlethystic, IntPoly::monomial(Integer(c), r), 8).series(), expected);
    }
  }
}

TEST(Plethystic, ProjectiveLine) {
  // sigma_t(1 + u^2) = 1/((1 - t)(1 - u^2 t)).
  const auto one = IntPoly::one(), u2 = ipoly({0, 0, 1});
  const auto expected = RatWitt<IntPoly>(Poly<IntPoly>{one}, Poly<IntPoly>{one, IntPoly(-one)} * Poly<IntPoly>{one, IntPoly(-u2)}).expansion(6);
  EXPECT_EQ(sigma_t(kPlethystic, ipoly({1, 0, 1}), 6), expected);
}

TEST(Lambda, LowDegreeAxioms) {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_integer(rng, -6, 6);
    const auto la = lambda_t(kBinomial, a, 4);
    EXPECT_EQ(la[0], Integer(1));
    EXPECT_EQ(la[1], a);
    const auto f = random_upoly(rng, 3, 2);
    const auto lf = lambda_t(kPlethystic, f, 4);
    EXPECT_EQ(lf[0], IntPoly::one());
    EXPECT_EQ(lf[1], f);
  }
  EXPECT_EQ(lambda_t(kBinomial, Integer(0), 5), WittVector<Integer>::zero(5));
  EXPECT_EQ(lambda_t(kPlethystic, IntPoly(), 5), WittVector<IntPoly>::zero(5));
}

TEST(Lambda, InvolutionOfSigma) {
  Rng rng(22);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_upoly(rng, 3, 2);
    EXPECT_EQ(lambda_t(kPlethystic, f, 8), lambda_involution(sigma_t(kPlethystic, f, 8)));
  }
}

TEST(LambdaAdditivity, Examples) {
  EXPECT_TRUE(check_lambda_additivity(kBinomial, Integer(2), Integer(3), 8).holds());
  EXPECT_EQ(lambda_t(kBinomial, Integer(5), 8).series(), Series<Integer>::from_poly(ipoly({1, 5, 10, 10, 5, 1}), 8));
  EXPECT_TRUE(check_lambda_additivity(kPlethystic, ipoly({0, 1}), ipoly({0, 0, 1}), 6).holds());
  EXPECT_TRUE(check_lambda_additivity(kBinomial, Integer(0), Integer(0), 6).holds());
  const auto report = check_lambda_additivity(kPlethystic, ipoly({2, -1, 1}), ipoly({0, 1, 0, -2}), 8);
  ASSERT_EQ(report.checks.size(), 3u);
  EXPECT_TRUE(report.holds());
  EXPECT_EQ(report.to_string(), "HOLDS (precision 8)");
}

TEST(SigmaRingHom, Examples) {
  for (std::size_t i = 0; i <= 3; ++i) {
    for (std::size_t j = 0; j <= 3; ++j) {
      const auto ui = IntPoly::monomial(Integer(1), i), uj = IntPoly::monomial(Integer(1), j);
      EXPECT_EQ(witt_mul(sigma_t(kPlethystic, ui, 6), sigma_t(kPlethystic, uj, 6)),
                teichmuller(IntPoly::monomial(Integer(1), i + j), 6));
    }
  }
  for (long m = -3; m <= 3; ++m) EXPECT_TRUE(check_sigma_ring_hom(kBinomial, Integer(m), Integer(1), 8).holds());
  EXPECT_TRUE(check_sigma_ring_hom(kPlethystic, ipoly({1, 1}), ipoly({1, -1}), 10).holds());
}

TEST(SigmaRingHom, RandomBothStructures) {
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(check_sigma_ring_hom(kBinomial, random_integer(rng), random_integer(rng), 10).holds());
    EXPECT_TRUE(check_sigma_ring_hom(kPlethystic, random_upoly(rng, 2, 2), random_upoly(rng, 2, 2), 8).holds());
  }
}

TEST(Verdicts, FailureNamesFirstDifference) {
  const auto v = compare("demo", int_series({1, 2, 3, 4}), int_series({1, 2, 5, 4}));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.to_string(), "FAILS at t^2: lhs=3, rhs=5");
  Report r;
  r.checks.push_back(compare("ok", int_series({1, 1}), int_series({1, 1})));
  r.checks.push_back(v);
  EXPECT_FALSE(r.holds());
  EXPECT_EQ(r.first_failure(), &r.checks[1]);
}

}  // namespace
}  // namespace wittzeta
