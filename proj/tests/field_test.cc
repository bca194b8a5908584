// Copyright 2026 The SDGR Authors.
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


#include "sdgr/field.h"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "sdgr/errors.h"
#include "sdgr/rng.h"
#include "test_oracles.h"

namespace sdgr {
namespace {

constexpr std::uint32_t kTablePrimes[] = {19, 23, 31, 41};

TEST(FieldTest, LambdaIsSmallestNonResidue) {
  EXPECT_EQ(FindLambda(19), 2u);
  EXPECT_EQ(FindLambda(23), 5u);
  EXPECT_EQ(FindLambda(3), 2u);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 41u, 97u}) {
    EXPECT_EQ(FindLambda(p), testing::NaiveLambda(p)) << "p=" << p;
  }
}

TEST(FieldTest, RejectsBadParameters) {
  EXPECT_THROW(Field::Create(2), DomainError);
  EXPECT_THROW(Field::Create(21), DomainError);
  EXPECT_THROW(Field::Create(1), DomainError);
  EXPECT_THROW(Field::Create(19, 2), DomainError);
  EXPECT_NO_THROW(Field::Create(19, 1));
}

TEST(FieldTest, KnownSumsAndProducts) {
  const Field f19 = Field::Create(19);
  const Field f3 = Field::Create(3);
  EXPECT_EQ(f19.Add({18, 5}, {1, 14}), (Fq2{0, 0}));
  EXPECT_EQ(f3.Add({1, 2}, {2, 2}), (Fq2{0, 1}));
  EXPECT_EQ(f3.Mul({0, 1}, {0, 1}), (Fq2{2, 0}));
  EXPECT_EQ(f19.Mul({3, 4}, {5, 6}), (Fq2{6, 0}));
  EXPECT_EQ(f19.Mul(f19.One(), {7, 11}), (Fq2{7, 11}));
  EXPECT_EQ(f19.Add(f19.Zero(), {7, 11}), (Fq2{7, 11}));
}

TEST(FieldTest, KnownInversesAndFrobenius) {
  const Field f3 = Field::Create(3);
  EXPECT_EQ(f3.Inv({1, 0}), (Fq2{1, 0}));
  EXPECT_EQ(f3.Inv({0, 1}), (Fq2{0, 2}));
  EXPECT_EQ(f3.Frobenius({0, 1}), (Fq2{0, 2}));
  EXPECT_EQ(f3.Frobenius({2, 0}), (Fq2{2, 0}));
  EXPECT_THROW(f3.Inv(f3.Zero()), DomainError);
}

TEST(FieldTest, ExhaustiveAgainstOracleAtSmallPrimes) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field f = Field::Create(p);
    const testing::NaiveFq2 oracle{p, f.lambda()};
    for (std::uint32_t a0 = 0; a0 < p; ++a0) {
      for (std::uint32_t a1 = 0; a1 < p; ++a1) {
        const Fq2 a{a0, a1};
        EXPECT_EQ(f.Frobenius(a), oracle.Frobenius(a));
        EXPECT_EQ(f.FrobeniusLadder(a), f.Frobenius(a));
        EXPECT_EQ(f.Frobenius(f.Frobenius(a)), a);
        if (!a.IsZero()) {
          EXPECT_EQ(f.Mul(a, f.Inv(a)), f.One());
        }
        for (std::uint32_t b0 = 0; b0 < p; ++b0) {
          for (std::uint32_t b1 = 0; b1 < p; ++b1) {
            const Fq2 b{b0, b1};
            ASSERT_EQ(f.Mul(a, b), oracle.Mul(a, b));
            ASSERT_EQ(f.Add(a, b), oracle.Add(a, b));
            ASSERT_EQ(f.Frobenius(f.Mul(a, b)),
                      f.Mul(f.Frobenius(a), f.Frobenius(b)));
            ASSERT_EQ(f.Frobenius(f.Add(a, b)),
                      f.Add(f.Frobenius(a), f.Frobenius(b)));
          }
        }
      }
    }
  }
}

class FieldAxiomsTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxiomsTest, RandomTriples) {
  const Field f = Field::Create(GetParam());
  const testing::NaiveFq2 oracle{f.p(), f.lambda()};
  Rng rng = Rng::FromSeed(GetParam());
  for (int t = 0; t < 10000; ++t) {
    const Fq2 a = f.Sample(rng), b = f.Sample(rng), c = f.Sample(rng);
    ASSERT_EQ(f.Mul(f.Mul(a, b), c), f.Mul(a, f.Mul(b, c)));
    ASSERT_EQ(f.Add(f.Add(a, b), c), f.Add(a, f.Add(b, c)));
    ASSERT_EQ(f.Mul(a, b), f.Mul(b, a));
    ASSERT_EQ(f.Add(a, b), f.Add(b, a));
    ASSERT_EQ(f.Mul(a, f.Add(b, c)), f.Add(f.Mul(a, b), f.Mul(a, c)));
    ASSERT_EQ(f.Add(a, f.Neg(a)), f.Zero());
    ASSERT_EQ(f.Sub(a, b), f.Add(a, f.Neg(b)));
    ASSERT_EQ(f.Mul(a, b), oracle.Mul(a, b));
    ASSERT_EQ(f.FrobeniusLadder(a), f.Frobenius(a));
    ASSERT_EQ(f.Frobenius(f.Mul(a, b)), f.Mul(f.Frobenius(a), f.Frobenius(b)));
    if (!a.IsZero()) ASSERT_EQ(f.Mul(a, f.Inv(a)), f.One());
  }
}

INSTANTIATE_TEST_SUITE_P(TablePrimes, FieldAxiomsTest,
                         ::testing::ValuesIn(kTablePrimes));

TEST(FieldTest, LadderCostIsBitLengthPlusPopcount) {
  const Field f = Field::Create(19);
  OpCounts counts;
  (void)f.FrobeniusLadder({3, 7}, &counts);
  EXPECT_EQ(f.FrobeniusLadderCost(), 8u);  // 19 = 0b10011: 5 squarings, 3 multiplies
  EXPECT_EQ(counts.field_muls, f.FrobeniusLadderCost());
}

TEST(FieldTest, SamplerIsUniformAtP3) {
  const Field f = Field::Create(3);
  Rng rng = Rng::FromSeed(2026);
  constexpr int kDraws = 100000;
  std::array<int, 9> counts{};
  for (int i = 0; i < kDraws; ++i) {
    const Fq2 a = f.Sample(rng);
    ASSERT_TRUE(f.Contains(a));
    ++counts[a.c0 * 3 + a.c1];
  }
  const double expected = kDraws / 9.0;
  const double sigma = std::sqrt(kDraws * (1.0 / 9) * (8.0 / 9));
  for (int c : counts) EXPECT_LE(std::abs(c - expected), 5 * sigma);
}

TEST(FieldTest, SeededSamplingIsReproducible) {
  const Field f = Field::Create(41);
  Rng r1 = Rng::FromSeed(9), r2 = Rng::FromSeed(9);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(f.Sample(r1), f.Sample(r2));
}

}  // namespace
}  // namespace sdgr
