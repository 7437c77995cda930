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

#include "nihoperm/perm.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace nihoperm {
namespace {

// x^r h(x^s) evaluated directly, for the brute-force side of comparisons.
Word ComposedMap(const Field& f, std::uint64_t r, const UniPoly& h, std::uint64_t s, Word x) {
  return f.Mul(f.PowU(x, r), h.Eval(f.PowU(x, s)));
}

TEST(BruteforceTest, Examples) {
  const Field gf16 = Field::OfDegree(4);
  const auto id = IsPermutationBruteforce(gf16, [](Word x) { return x; });
  EXPECT_TRUE(id.verdict);
  EXPECT_FALSE(id.witness.has_value());
  EXPECT_EQ(id.domain_size, 16u);
  EXPECT_EQ(id.image_size, 16u);
  EXPECT_EQ(VerifyMethodName(id.method), "bruteforce");
  for (unsigned k = 1; k <= 16; ++k) {
    const Field f = Field::OfDegree(k);
    EXPECT_TRUE(IsPermutationBruteforce(f, [&](Word x) { return f.Square(x); }).verdict) << k;
  }
}

TEST(BruteforceTest, CubingOnGf4Collides) {
  const Field gf4 = Field::OfDegree(2);
  const auto r = IsPermutationBruteforce(gf4, [&](Word x) { return gf4.PowU(x, 3); });
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->kind, WitnessKind::kCollision);
  EXPECT_EQ(r.witness->first, 1u);
  EXPECT_EQ(r.witness->second, 2u);
  EXPECT_EQ(r.witness->image, 1u);
  EXPECT_EQ(r.image_size, 2u);
}

TEST(BruteforceTest, ParallelMergeMatchesSerial) {
  const Field f = Field::OfDegree(12);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t e = rng() % f.order() + 1;
    auto map = [&](Word x) { return f.PowU(x, e); };
    PermOptions serial, wide;
    wide.parallelism = 5;
    const auto a = IsPermutationBruteforce(f, map, serial);
    const auto b = IsPermutationBruteforce(f, map, wide);
    ASSERT_EQ(a.verdict, std::gcd<std::uint64_t>(e, f.order()) == 1);
    ASSERT_EQ(a.verdict, b.verdict);
    ASSERT_EQ(a.image_size, b.image_size);
    ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
    ASSERT_EQ(a.witness.has_value(), !a.verdict);
    if (a.witness) {
      ASSERT_EQ(a.witness->first, b.witness->first);
      ASSERT_EQ(a.witness->second, b.witness->second);
      ASSERT_EQ(map(a.witness->first), map(a.witness->second));
      ASSERT_NE(a.witness->first, a.witness->second);
    }
  }
}

TEST(BruteforceTest, Errors) {
  PermOptions opts;
  opts.max_log_domain = 10;
  try {
    IsPermutationBruteforce(Field::OfDegree(12), [](Word x) { return x; }, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainTooLarge);
  }
  EXPECT_THROW(IsPermutationBruteforce(Field::OfDegree(4), [](Word x) { return x + 16; }), Error);
}

TEST(CriterionTest, MonomialExamples) {
  const Field gf16 = Field::OfDegree(4);
  const UniPoly one(gf16, {1});
  const auto ok = IsPermutationCriterion(gf16, 7, one, 5, 3);
  EXPECT_TRUE(ok.verdict);
  EXPECT_EQ(ok.domain_size, 5u);
  EXPECT_EQ(VerifyMethodName(ok.method), "lemma1");
  const auto bad = IsPermutationCriterion(gf16, 3, one, 5, 3);
  EXPECT_FALSE(bad.verdict);
  EXPECT_FALSE(bad.witness.has_value());
  const auto collide = IsPermutationCriterion(gf16, 5, one, 5, 3);  // x^5 is constant on the 5th roots
  EXPECT_FALSE(collide.verdict);
  ASSERT_TRUE(collide.witness.has_value());
  EXPECT_EQ(collide.witness->kind, WitnessKind::kCollision);
}

TEST(CriterionTest, OffTargetWitness) {
  const Field gf16 = Field::OfDegree(4);
  const UniPoly h(gf16, {1, 1});  // vanishes at 1
  const auto r = IsPermutationCriterion(gf16, 1, h, 5, 3);
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->kind, WitnessKind::kOffTarget);
  EXPECT_EQ(r.witness->first, 1u);
  EXPECT_EQ(r.witness->image, 0u);
  EXPECT_FALSE(IsPermutationBruteforce(gf16, [&](Word x) { return ComposedMap(gf16, 1, h, 3, x); }).verdict);
}

TEST(CriterionTest, Errors) {
  const Field gf16 = Field::OfDegree(4);
  const UniPoly one(gf16, {1});
  try {
    IsPermutationCriterion(gf16, 1, one, 4, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadFactorization);
  }
  EXPECT_THROW(IsPermutationCriterion(gf16, 0, one, 5, 3), Error);
  EXPECT_THROW(IsPermutationCriterion(gf16, 1, UniPoly(Field::OfDegree(5), {1}), 5, 3), Error);
}

TEST(CriterionTest, AgreesWithBruteforceOnRandomControls) {
  std::mt19937_64 rng(2026);
  int compared = 0;
  for (unsigned k = 2; k <= 12; ++k) {
    const Field f = Field::OfDegree(k);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d <= f.order(); ++d) {
      if (f.order() % d == 0) divisors.push_back(d);
    }
    for (int i = 0; i < 20; ++i) {
      const std::uint64_t d = divisors[rng() % divisors.size()];
      const std::uint64_t s = f.order() / d;
      const std::uint64_t r = rng() % 20 + 1;
      std::vector<Word> c(rng() % 6 + 1, 0);
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (j == 0 || rng() % 2) c[j] = rng() & f.mask();
      }
      c.back() = c.back() == 0 ? 1 : c.back();
      const UniPoly h(f, c);
      const auto crit = IsPermutationCriterion(f, r, h, d, s);
      const auto brute = IsPermutationBruteforce(f, [&](Word x) { return ComposedMap(f, r, h, s, x); });
      ASSERT_EQ(crit.verdict, brute.verdict) << "k=" << k << " r=" << r << " d=" << d << " h=" << h.ToString();
      ++compared;
    }
  }
  EXPECT_GE(compared, 100);
}

TEST(TrinomialVerifyTest, ConjectureFamily) {
  for (unsigned m : {1u, 2u, 3u, 4u, 6u}) {
    const auto f = NihoTrinomial::Conjecture(m);
    const Field field = Field::OfDegree(2 * m);
    const auto brute = VerifyTrinomialBruteforce(f, field);
    const auto crit = VerifyTrinomialCriterion(f, field);
    EXPECT_TRUE(brute.verdict) << m;
    EXPECT_TRUE(crit.verdict) << m;
    EXPECT_EQ(brute.domain_size, field.size());
    EXPECT_EQ(crit.domain_size, (Word{1} << m) + 1);
  }
}

TEST(TrinomialVerifyTest, AllExponentPairsAgreeAtSmallM) {
  for (unsigned m : {2u, 3u}) {
    const Field field = Field::OfDegree(2 * m);
    const Word n = (Word{1} << m) + 1;
    int permutations = 0;
    for (Word s = 0; s < n; ++s) {
      for (Word t = 0; t < n; ++t) {
        const NihoTrinomial f(m, s, t);
        const bool brute = VerifyTrinomialBruteforce(f, field).verdict;
        ASSERT_EQ(brute, VerifyTrinomialCriterion(f, field).verdict) << m << ":" << s << "," << t;
        permutations += brute;
      }
    }
    EXPECT_GT(permutations, 0);
    EXPECT_LT(permutations, static_cast<int>(n * n));
  }
}

}  // namespace
}  // namespace nihoperm
