// Copyright 2026 The qifl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qifl/rational.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qifl {
namespace {

TEST(RationalTest, CanonicalForm) {
  Rational r(6, -8);
  EXPECT_EQ(r.numerator_string(), "-3");
  EXPECT_EQ(r.denominator_string(), "4");
  EXPECT_EQ(Rational(10, 5).str(), "2");
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(*Rational::parse("19/20"), Rational(19, 20));
  EXPECT_EQ(*Rational::parse("0.75"), Rational(3, 4));
  EXPECT_EQ(*Rational::parse("0.6"), Rational(3, 5));
  EXPECT_EQ(*Rational::parse("-2.50"), Rational(-5, 2));
  EXPECT_EQ(*Rational::parse("7"), Rational(7));
  EXPECT_EQ(*Rational::parse("4/8"), Rational(1, 2));
  // Leading zeros are decimal, not octal.
  EXPECT_EQ(*Rational::parse("010"), Rational(10));
  EXPECT_EQ(*Rational::parse("0.075"), Rational(3, 40));
  EXPECT_EQ(*Rational::parse("08/9"), Rational(8, 9));
}

TEST(RationalTest, RejectsOutsideGrammar) {
  for (const char* bad : {"", "1/0", "1/03", "1.", ".5", "a", "1/2/3", "+1",
                          "1e3", " 1", "--1", "1/-2"}) {
    EXPECT_FALSE(Rational::parse(bad).has_value()) << bad;
  }
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(Rational(19, 11).decimal(4), "1.7273");
  EXPECT_EQ(Rational(5, 3).decimal(2), "1.67");
  EXPECT_EQ(Rational(1, 3).decimal(0), "0");
  EXPECT_EQ(Rational(-1, 8).decimal(2), "-0.13");
  EXPECT_EQ(Rational(1, 20000).decimal(4), "0.0001");
}

TEST(RationalTest, ArithmeticIsExact) {
  Rational sum;
  for (int i = 0; i < 10; ++i) sum += Rational(1, 10);
  EXPECT_EQ(sum, Rational(1));
  EXPECT_EQ(Rational(19, 20) + Rational(3, 4), Rational(17, 10));
}

TEST(RationalTest, ParseRenderRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const long n = static_cast<long>(rng() % 2001) - 1000;
    const long d = 1 + static_cast<long>(rng() % 999);
    const Rational r(n, d);
    EXPECT_EQ(*Rational::parse(r.str()), r);
  }
}

TEST(ExtRationalTest, InfinityOrdersAboveEverything) {
  const ExtRational inf = ExtRational::infinity();
  EXPECT_GT(inf, ExtRational(Rational(1000000)));
  EXPECT_EQ(inf, ExtRational::infinity());
  EXPECT_EQ(inf.str(), "inf");
  EXPECT_THROW(inf.value(), std::logic_error);
  EXPECT_LT(ExtRational(3), ExtRational(4));
}

}  // namespace
}  // namespace qifl
