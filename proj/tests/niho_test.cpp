// Copyright 2026 The nihoperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nihoperm/niho.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace nihoperm {
namespace {

TEST(ExponentsTest, Examples) {
  const auto e2 = ConjectureExponents(2);
  EXPECT_EQ(e2.modulus, 5u);
  EXPECT_EQ(e2.s, 4u);
  EXPECT_EQ(e2.t, 0u);
  const auto e3 = ConjectureExponents(3);
  EXPECT_EQ(e3.s, 2u);
  EXPECT_EQ(e3.t, 5u);
  for (unsigned m : {5u, 15u, 25u}) {
    try {
      ConjectureExponents(m);
      FAIL() << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotInvertible);
    }
  }
  EXPECT_THROW(ConjectureExponents(0), Error);
}

TEST(ExponentsTest, MatchExtendedEuclidOracle) {
  for (unsigned m = 1; m <= 31; ++m) {
    const std::int64_t n = (std::int64_t{1} << m) + 1;
    const std::int64_t inv = oracle::InverseMod(11, n);
    EXPECT_EQ(inv < 0, m % 10 == 5) << m;
    if (inv < 0) {
      EXPECT_EQ(ClassifyRegime(m), Regime::kNotInvertible);
      EXPECT_THROW(ConjectureExponents(m), Error);
      continue;
    }
    const auto e = ConjectureExponents(m);
    EXPECT_EQ(static_cast<std::int64_t>(e.s), (4 * inv) % n);
    EXPECT_EQ(static_cast<std::int64_t>(e.t), (10 * inv) % n);
    EXPECT_EQ(ClassifyRegime(m), m % 5 == 0 ? Regime::kOutOfTheorem : Regime::kProved);
  }
  EXPECT_EQ(RegimeName(ClassifyRegime(10)), "out-of-theorem");
  EXPECT_EQ(RegimeName(ClassifyRegime(5)), "not-invertible");
  EXPECT_EQ(RegimeName(ClassifyRegime(7)), "proved");
}

TEST(TrinomialTest, NihoProperty) {
  for (unsigned m = 1; m <= 31; ++m) {
    if (ClassifyRegime(m) == Regime::kNotInvertible) continue;
    const auto f = NihoTrinomial::Conjecture(m);
    const Word q1 = (Word{1} << (2 * m)) - 1;
    const Word low = (Word{1} << m) - 1;
    EXPECT_GE(f.exponent_s(), 1u);
    EXPECT_LE(f.exponent_s(), q1);
    if (m > 1) {
      EXPECT_EQ(f.exponent_s() % low, 1u) << m;
      EXPECT_EQ(f.exponent_t() % low, 1u) << m;
    }
    const NihoTrinomial shifted(m, f.s() + (Word{1} << m) + 1, f.t() + 2 * ((Word{1} << m) + 1));
    EXPECT_EQ(shifted.exponent_s(), f.exponent_s());
    EXPECT_EQ(shifted.exponent_t(), f.exponent_t());
  }
}

TEST(TrinomialTest, EvalExamples) {
  for (unsigned m : {1u, 2u, 3u, 4u}) {
    const auto f = NihoTrinomial::Conjecture(m);
    const Field field = Field::OfDegree(2 * m);
    EXPECT_EQ(f.Eval(field, 0), 0u);
    EXPECT_EQ(f.Eval(field, 1), 1u);
  }
  // m = 2: t = 0 makes the third term x, cancelling the first.
  const auto f2 = NihoTrinomial::Conjecture(2);
  const Field gf16 = Field::OfDegree(4);
  EXPECT_EQ(f2.exponent_s(), 13u);
  for (Word x = 0; x < 16; ++x) EXPECT_EQ(f2.Eval(gf16, x), oracle::PowMod(x, 13, gf16.spec().reduction_poly));
  EXPECT_THROW(f2.Eval(Field::OfDegree(6), 1), Error);
}

TEST(TrinomialTest, EvalMatchesOracleForArbitraryExponents) {
  const unsigned m = 3;
  const Field field = Field::OfDegree(6);
  const Word mod = field.spec().reduction_poly;
  for (Word s = 0; s < 9; ++s) {
    for (Word t = 0; t < 9; ++t) {
      const NihoTrinomial f(m, s, t);
      for (Word x = 0; x < 64; ++x) {
        const Word expected = x ^ oracle::PowMod(x, s * 7 + 1, mod) ^ oracle::PowMod(x, t * 7 + 1, mod);
        ASSERT_EQ(f.Eval(field, x), expected) << s << "," << t << "," << x;
      }
    }
  }
  EXPECT_EQ(NihoTrinomial(m, 2, 5).Eval(field.Element(9)), field.Element(NihoTrinomial(m, 2, 5).Eval(field, 9)));
}

TEST(TrinomialTest, CircleFactor) {
  const auto f = NihoTrinomial::Conjecture(3);
  const Field field = Field::OfDegree(6);
  EXPECT_EQ(f.CircleFactor(field).ToString(), "5:1,2:1,0:1");
  const auto f2 = NihoTrinomial::Conjecture(2);  // 1 + x^4 + x^0 = x^4
  EXPECT_EQ(f2.CircleFactor(Field::OfDegree(4)).ToString(), "4:1");
}

TEST(CircleMapTest, Examples) {
  for (unsigned m = 1; m <= 9; ++m) {
    const auto c = UnitCircle::OfM(m);
    EXPECT_EQ(CircleMapEval(c, 1), 1u);
    for (Word x : c.elements()) {
      const Word y = CircleMapEval(c, x);
      ASSERT_TRUE(c.Contains(y)) << "m=" << m;
      ASSERT_EQ(y, CircleMapPowerForm(c, x)) << "m=" << m;
    }
  }
  const auto c3 = UnitCircle::OfM(3);
  EXPECT_EQ(CircleMapEval(c3, c3.field().Element(c3.generator())).bits(), CircleMapEval(c3, c3.generator()));
}

TEST(CircleMapTest, Errors) {
  const auto c = UnitCircle::OfM(3);
  Word off = 2;
  while (c.Contains(off)) ++off;
  try {
    CircleMapEval(c, off);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOnCircle);
  }
  EXPECT_THROW(CircleMapEval(c, 0), Error);
  EXPECT_THROW(CircleMapPowerForm(c, off), Error);
  EXPECT_THROW(CircleMapEval(c, Field::OfDegree(5).One()), Error);
}

TEST(CircleMapTest, BijectiveOnCircleWhenFiveDoesNotDivideM) {
  for (unsigned m = 1; m <= 14; ++m) {
    if (m % 5 == 0) continue;
    const auto c = UnitCircle::OfM(m);
    std::set<Word> image;
    for (Word x : c.elements()) image.insert(CircleMapEval(c, x));
    const std::set<Word> mu(c.elements().begin(), c.elements().end());
    EXPECT_EQ(image, mu) << "m=" << m;
  }
}

TEST(CircleMapTest, DenominatorNeverVanishesOnCircle) {
  // Roots of x^5 + x^2 + 1 live in GF(32), which lies in GF(2^m) when 5 | m
  // and meets the circle only in 1.
  for (unsigned m : {5u, 10u}) {
    const auto c = UnitCircle::OfM(m);
    for (Word x : c.elements()) ASSERT_NO_THROW(CircleMapEval(c, x));
  }
}

TEST(RootCountTest, Examples) {
  for (unsigned m : {1u, 3u}) {
    const auto c = UnitCircle::OfM(m);
    for (Word t : c.elements()) EXPECT_EQ(CircleRootCount(c, t), 1u) << "m=" << m;
  }
  const auto c = UnitCircle::OfM(3);
  EXPECT_EQ(CircleRootCount(c, c.field().One()), 1u);
  EXPECT_THROW(CircleRootCount(c, 0), Error);
  EXPECT_THROW(CircleRootCount(c, Field::OfDegree(4).One()), Error);
}

TEST(RootCountTest, FastPathMatchesDirectCount) {
  for (unsigned m = 1; m <= 7; ++m) {
    const auto c = UnitCircle::OfM(m);
    const auto fast = CircleRootCounts(c);
    const auto parallel = CircleRootCounts(c, 3);
    ASSERT_EQ(fast.size(), c.size());
    EXPECT_EQ(fast, parallel);
    for (std::size_t i = 0; i < fast.size(); ++i) ASSERT_EQ(fast[i], CircleRootCount(c, c.elements()[i]));
  }
}

TEST(RootCountTest, AtMostOneWhenFiveDoesNotDivideM) {
  for (unsigned m = 1; m <= 11; ++m) {
    if (m % 5 == 0) continue;
    for (auto n : CircleRootCounts(UnitCircle::OfM(m))) ASSERT_EQ(n, 1u) << "m=" << m;
  }
}

}  // namespace
}  // namespace nihoperm
