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


#include "sdgr/dihedral.h"

#include <gtest/gtest.h>

#include <vector>

#include "sdgr/errors.h"
#include "sdgr/rng.h"
#include "test_oracles.h"

namespace sdgr {
namespace {

TEST(DihedralTest, KnownProductsAtN3) {
  const DihedralGroup g(3);
  EXPECT_EQ(g.Mul(1, 1), 2u);
  EXPECT_EQ(g.Mul(3, 1), 5u);  // y x = x^2 y
  EXPECT_EQ(g.Mul(4, 4), 0u);
  EXPECT_EQ(g.Mul(1, 3), 4u);
}

TEST(DihedralTest, InverseAndTheta) {
  const DihedralGroup g(19);
  EXPECT_EQ(g.Inverse(0), 0u);
  EXPECT_EQ(g.Inverse(5), 14u);
  EXPECT_EQ(g.Inverse(25), 25u);
  EXPECT_EQ(g.Theta(0), Automorphism::kIdentity);
  EXPECT_EQ(g.Theta(19), Automorphism::kSigma);
  EXPECT_EQ(g.Theta(18), Automorphism::kIdentity);
}

TEST(DihedralTest, RejectsBadInput) {
  EXPECT_THROW(DihedralGroup(0), DomainError);
  const DihedralGroup g(3);
  EXPECT_THROW(g.Mul(6, 0), DomainError);
  EXPECT_THROW(g.Inverse(6), DomainError);
}

class DihedralExhaustiveTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(DihedralExhaustiveTest, MatchesRelationOracle) {
  const std::uint32_t n = GetParam();
  const DihedralGroup g(n);
  const testing::NaiveDihedral oracle{n};
  for (GroupIndex a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.Mul(a, 0), a);
    EXPECT_EQ(g.Mul(0, a), a);
    EXPECT_EQ(g.Inverse(a), oracle.Inverse(a));
    EXPECT_EQ(g.Inverse(g.Inverse(a)), a);
    EXPECT_EQ(g.Mul(a, g.Inverse(a)), 0u);
    std::vector<bool> row(g.order()), col(g.order());
    for (GroupIndex b = 0; b < g.order(); ++b) {
      ASSERT_EQ(g.Mul(a, b), oracle.Mul(a, b));
      ASSERT_EQ(g.MulClosedForm(a, b), g.Mul(a, b));
      ASSERT_EQ(g.Theta(g.Mul(a, b)), Compose(g.Theta(a), g.Theta(b)));
      row[g.Mul(a, b)] = true;
      col[g.Mul(b, a)] = true;
    }
    for (GroupIndex k = 0; k < g.order(); ++k) {
      EXPECT_TRUE(row[k] && col[k]) << "row/column " << a << " is not a permutation";
    }
  }
}

// Exhaustive up to n = 8, sampled above.
TEST_P(DihedralExhaustiveTest, Associativity) {
  const DihedralGroup g(GetParam());
  if (g.n() > 8) {
    Rng rng = Rng::FromSeed(g.n());
    for (int t = 0; t < 100000; ++t) {
      const GroupIndex a = rng.UniformBelow(g.order()),
                       b = rng.UniformBelow(g.order()),
                       c = rng.UniformBelow(g.order());
      ASSERT_EQ(g.Mul(g.Mul(a, b), c), g.Mul(a, g.Mul(b, c)));
    }
    return;
  }
  for (GroupIndex a = 0; a < g.order(); ++a) {
    for (GroupIndex b = 0; b < g.order(); ++b) {
      for (GroupIndex c = 0; c < g.order(); ++c) {
        ASSERT_EQ(g.Mul(g.Mul(a, b), c), g.Mul(a, g.Mul(b, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, DihedralExhaustiveTest,
                         ::testing::Values(1u, 2u, 3u, 4u, 8u, 19u, 23u, 31u, 41u));

TEST(DihedralTest, RowSpanMatchesMul) {
  const DihedralGroup g(7);
  for (GroupIndex a = 0; a < g.order(); ++a) {
    const auto row = g.Row(a);
    ASSERT_EQ(row.size(), g.order());
    for (GroupIndex b = 0; b < g.order(); ++b) EXPECT_EQ(row[b], g.Mul(a, b));
  }
}

}  // namespace
}  // namespace sdgr
