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

#include "nihoperm/unit_circle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

namespace nihoperm {
namespace {

TEST(UnitCircleTest, SmallCircles) {
  const auto c1 = UnitCircle::OfM(1);
  std::set<Word> s1(c1.elements().begin(), c1.elements().end());
  EXPECT_EQ(s1, (std::set<Word>{1, 2, 3}));
  EXPECT_EQ(UnitCircle::OfM(2).size(), 5u);
  EXPECT_EQ(UnitCircle::OfM(4).size(), 17u);
  EXPECT_EQ(UnitCircle::OfM(4).elements().front(), 1u);
}

TEST(UnitCircleTest, EnumerationMatchesFullFieldFilter) {
  for (unsigned m = 1; m <= 6; ++m) {
    const auto c = UnitCircle::OfM(m);
    const Word mod = c.field().spec().reduction_poly;
    std::set<Word> filtered;
    for (Word x = 1; x < c.field().size(); ++x) {
      if (oracle::PowMod(x, (Word{1} << m) + 1, mod) == 1) filtered.insert(x);
    }
    const std::set<Word> enumerated(c.elements().begin(), c.elements().end());
    EXPECT_EQ(enumerated.size(), c.elements().size()) << "repeats at m=" << m;
    EXPECT_EQ(enumerated, filtered) << "m=" << m;
  }
}

TEST(UnitCircleTest, Membership) {
  const auto c = UnitCircle::OfM(5);
  const Field& f = c.field();
  EXPECT_TRUE(c.Contains(1));
  EXPECT_FALSE(c.Contains(0));
  for (Word x : c.elements()) ASSERT_TRUE(c.Contains(x));
  // Subfield GF(2^5) meets the circle only in 1.
  for (Word x = 2; x < f.size(); ++x) {
    if (f.InSubfield(x, 5)) {
      ASSERT_FALSE(c.Contains(x)) << x;
    }
  }
  EXPECT_TRUE(c.Contains(f.Element(c.generator())));
  EXPECT_FALSE(c.Contains(Field(FieldSpec{10, 0x40f}).One()));  // same degree, other polynomial
}

TEST(UnitCircleTest, ClosureAndInverse) {
  const auto c = UnitCircle::OfM(7);
  const Field& f = c.field();
  const auto& mu = c.elements();
  for (std::size_t i = 0; i < mu.size(); i += 3) {
    ASSERT_EQ(f.Inv(mu[i]), f.Frobenius(mu[i], 7));
    ASSERT_TRUE(c.Contains(f.Mul(mu[i], mu[(i * 7 + 5) % mu.size()])));
  }
}

TEST(UnitCircleTest, GeneratorOrder) {
  for (unsigned m = 1; m <= 12; ++m) {
    const auto c = UnitCircle::OfM(m);
    const Field& f = c.field();
    const Word n = (Word{1} << m) + 1;
    EXPECT_EQ(f.PowU(c.generator(), n), 1u);
    for (Word d = 1; d < n; ++d) {
      if (n % d == 0) {
        ASSERT_NE(f.PowU(c.generator(), d), 1u) << "m=" << m << " d=" << d;
      }
    }
  }
}

TEST(UnitCircleTest, Errors) {
  EXPECT_THROW(UnitCircle(Field::OfDegree(5), 2), Error);
  try {
    UnitCircle(Field::OfDegree(6), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeMismatch);
  }
}

}  // namespace
}  // namespace nihoperm
