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


#include "sdgr/games.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "sdgr/errors.h"
#include "sdgr/rng.h"

namespace sdgr {
namespace {

Params ToyParams(std::uint64_t seed) {
  Rng rng = Rng::FromSeed(seed);
  return Params::Generate(FindParamSet("toy"), rng);
}

TEST(SdpdTest, HonestWitnessVerifiesAndRandomOnesDoNot) {
  Rng rng = Rng::FromSeed(41);
  const Params params = Params::Generate(FindParamSet("p19"), rng);
  const SdpdChallenge ch = MakeSdpdChallenge(params, rng);
  EXPECT_TRUE(SdpdVerify(ch.instance, ch.witness));
  int rejected = 0;
  for (int t = 0; t < 100; ++t) {
    rejected += !SdpdVerify(ch.instance, SampleSecretPair(params.ring(), rng));
  }
  EXPECT_EQ(rejected, 100);
}

TEST(SdpdTest, SearchSpaceAndGuard) {
  const Params toy = ToyParams(42);
  EXPECT_EQ(SdpdSearchSpace(toy.ring()), 59049u);
  Rng rng = Rng::FromSeed(43);
  const Params p19 = Params::Generate(FindParamSet("p19"), rng);
  EXPECT_EQ(SdpdSearchSpace(p19.ring()), UINT64_MAX);
  const SdpdChallenge ch = MakeSdpdChallenge(p19, rng);
  EXPECT_THROW(SdpdBruteForce(ch.instance), SearchSpaceTooLarge);
}

TEST(SdpdTest, BruteForceFindsPlantedWitnessAndEveryHitBreaksCsdp) {
  for (std::uint64_t seed : {44u, 45u, 46u}) {
    const Params params = ToyParams(seed);
    Rng rng = Rng::FromSeed(seed + 100);
    const CsdpChallenge ch = MakeCsdpChallenge(params, rng);
    const SdpdInstance sdpd{params, ch.instance.pk2};
    const std::vector<SecretPair> found = SdpdBruteForce(sdpd);
    ASSERT_FALSE(found.empty());
    EXPECT_NE(std::find(found.begin(), found.end(), ch.secret2), found.end());
    for (const SecretPair& w : found) {
      ASSERT_TRUE(SdpdVerify(sdpd, w));
      ASSERT_TRUE(CsdpVerify(ch, CsdpKeyFromWitness(ch.instance, w)));
    }
    EXPECT_TRUE(CsdpVerify(ch, CsdpBruteForce(ch.instance)));
  }
}

TEST(SdpdTest, ThreadCountDoesNotChangeOutput) {
  const Params params = ToyParams(47);
  Rng rng = Rng::FromSeed(48);
  const SdpdChallenge ch = MakeSdpdChallenge(params, rng);
  EXPECT_EQ(SdpdBruteForce(ch.instance, 1), SdpdBruteForce(ch.instance, 3));
}

TEST(CsdpTest, HonestAndRandomKeys) {
  Rng rng = Rng::FromSeed(49);
  const Params params = Params::Generate(FindParamSet("p23"), rng);
  const CsdpChallenge ch = MakeCsdpChallenge(params, rng);
  EXPECT_TRUE(CsdpVerify(ch, AdjunctTwoSidedProduct(params.ring(), ch.secret1,
                                                    ch.instance.pk2)));
  EXPECT_TRUE(CsdpVerify(ch, CsdpKeyFromWitness(ch.instance, ch.secret2)));
  EXPECT_FALSE(CsdpVerify(ch, params.ring().SampleRing(rng)));
}

TEST(DsdpTest, OracleDistinguisherHasAdvantageOne) {
  const Params params = ToyParams(50);
  Rng rng = Rng::FromSeed(51);
  const AdvantageEstimate est = DsdpExperiment(
      params, [](const DsdpInstance& d) { return d.hidden_bit; }, 1000, rng);
  EXPECT_EQ(est.advantage, 1.0);
  EXPECT_EQ(est.trials_b0 + est.trials_b1, 1000u);
}

TEST(DsdpTest, ConstantDistinguisherHasAdvantageZero) {
  const Params params = ToyParams(52);
  Rng rng = Rng::FromSeed(53);
  const AdvantageEstimate est =
      DsdpExperiment(params, [](const DsdpInstance&) { return 1; }, 1000, rng);
  EXPECT_EQ(est.advantage, 0.0);
  EXPECT_TRUE(est.difference_ci.Contains(0.0));
  EXPECT_THROW(DsdpExperiment(params, [](const DsdpInstance&) { return 1; }, 0, rng),
               DomainError);
}

TEST(DsdpTest, SubspaceDistinguisherOnDegenerateH) {
  const Params base = ToyParams(54);
  Rng rng = Rng::FromSeed(55);
  for (bool keep_cn : {true, false}) {
    const Params params = DegenerateParams(base.ring(), keep_cn, rng);
    const AdvantageEstimate est =
        DsdpExperiment(params, SubspaceDistinguisher, 2000, rng);
    EXPECT_GE(est.advantage, 0.95) << "keep_cn=" << keep_cn;
  }
}

TEST(DsdpTest, SubspaceDistinguisherGuessRules) {
  const Params base = ToyParams(56);
  const SkewRing& ring = base.ring();
  Rng rng = Rng::FromSeed(57);
  const Params cn = DegenerateParams(ring, true, rng);
  const Params cny = DegenerateParams(ring, false, rng);
  const RingElement x = ring.Basis(1), xy = ring.Basis(4);
  EXPECT_EQ(SubspaceDistinguisher({cn, x, x, x, 0}), 0);
  EXPECT_EQ(SubspaceDistinguisher({cn, x, x, xy, 0}), 1);
  EXPECT_EQ(SubspaceDistinguisher({cny, x, x, x, 0}), 1);
  EXPECT_EQ(SubspaceDistinguisher({cny, x, x, xy, 0}), 0);
}

// val(a) = n - min{k : u^k a = 0} with u = x - 1, computed by ring products.
std::uint32_t AnnihilatorValuation(const SkewRing& ring, const RingElement& a) {
  const RingElement u = ring.Sub(ring.Basis(1), ring.One());
  RingElement power = a;
  std::uint32_t k = 0;
  while (!power.IsZero()) {
    power = ring.Product(u, power);
    ++k;
  }
  return ring.n() - k;
}

TEST(LocalValuationTest, MatchesAnnihilatorOracle) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    Rng rng = Rng::FromSeed(63);
    const Params params = Params::Generate(p, 1, p, rng);
    const SkewRing& ring = params.ring();
    const RingElement u = ring.Sub(ring.Basis(1), ring.One());
    for (int t = 0; t < 200; ++t) {
      RingElement a = ring.SampleCn(rng);
      // Push some samples deep into the ideal chain.
      for (int j = t % 4; j > 0; --j) a = ring.Product(u, a);
      const RingElement ay = ring.Product(a, ring.Basis(ring.n()));
      EXPECT_EQ(LocalValuation(ring, a), AnnihilatorValuation(ring, a)) << p;
      EXPECT_EQ(LocalValuation(ring, ay), AnnihilatorValuation(ring, ay)) << p;
    }
    EXPECT_EQ(LocalValuation(ring, ring.Zero()), ring.n());
    EXPECT_THROW(LocalValuation(ring, ring.Add(ring.One(), ring.Basis(ring.n()))),
                 DomainError);
  }
}

TEST(LocalValuationTest, AddsOverHomogeneousProducts) {
  Rng rng = Rng::FromSeed(65);
  const Params params = Params::Generate(5, 1, 5, rng);
  const SkewRing& ring = params.ring();
  const RingElement u = ring.Sub(ring.Basis(1), ring.One());
  for (int t = 0; t < 300; ++t) {
    RingElement a = ring.SampleCn(rng), b = ring.SampleCn(rng);
    for (int j = t % 3; j > 0; --j) a = ring.Product(u, a);
    for (int j = (t / 3) % 3; j > 0; --j) b = ring.Product(b, u);
    if (t % 2) b = ring.Product(b, ring.Basis(ring.n()));
    const std::uint32_t want = std::min(
        ring.n(), LocalValuation(ring, a) + LocalValuation(ring, b));
    EXPECT_EQ(LocalValuation(ring, ring.Product(a, b)), want);
    EXPECT_EQ(LocalValuation(ring, ring.Product(b, a)), want);
  }
}

TEST(DsdpTest, ZeroKeyTieBreakNeverRejectsARealK0) {
  const Params base = ToyParams(66);
  Rng rng = Rng::FromSeed(67);
  for (bool keep_cn : {true, false}) {
    const Params params = DegenerateParams(base.ring(), keep_cn, rng);
    for (int t = 0; t < 20000; ++t) {
      const DsdpInstance inst = MakeDsdpInstance(params, 0, rng);
      if (inst.k.IsZero()) ASSERT_EQ(SubspaceDistinguisher(inst), 0);
    }
  }
}

TEST(DsdpTest, TieBreakBeatsThePlainMembershipTest) {
  const Params base = ToyParams(68);
  Rng rng = Rng::FromSeed(69);
  const Params params = DegenerateParams(base.ring(), true, rng);
  Rng r1 = Rng::FromSeed(70), r2 = Rng::FromSeed(70);
  const AdvantageEstimate plain =
      DsdpExperiment(params, PlainSubspaceDistinguisher, 20000, r1);
  const AdvantageEstimate refined =
      DsdpExperiment(params, SubspaceDistinguisher, 20000, r2);
  EXPECT_GT(refined.advantage, plain.advantage);
  EXPECT_GE(refined.advantage, 0.99);
}

TEST(DsdpTest, SubspaceDistinguisherIsACoinOnProperH) {
  const Params params = ToyParams(58);
  Rng rng = Rng::FromSeed(59);
  const AdvantageEstimate est =
      DsdpExperiment(params, SubspaceDistinguisher, 4000, rng);
  EXPECT_TRUE(est.difference_ci.Contains(0.0))
      << est.difference_ci.low << " " << est.difference_ci.high;
}

TEST(DsdpTest, CsdpSolverWinsDsdp) {
  const Params params = ToyParams(60);
  Rng rng = Rng::FromSeed(61);
  const AdvantageEstimate est = DsdpExperiment(
      params, MakeCsdpDistinguisher(CsdpBruteForce), 40, rng);
  // k1 can collide with k0 at toy size, so allow a little slack.
  EXPECT_GE(est.advantage, 0.8);
}

TEST(WilsonTest, KnownIntervals) {
  const Interval half = WilsonInterval(50, 100);
  EXPECT_NEAR(half.low, 0.4038, 1e-4);
  EXPECT_NEAR(half.high, 0.5962, 1e-4);
  const Interval none = WilsonInterval(0, 10);
  EXPECT_EQ(none.low, 0.0);
  EXPECT_NEAR(none.high, 0.2775, 1e-4);
}

TEST(AdvantageReportTest, Formats) {
  AdvantageEstimate est;
  est.trials = 4;
  est.ones_b0 = 2;
  const std::string kv = est.ToKeyValue();
  EXPECT_NE(kv.find("trials=4\n"), std::string::npos);
  EXPECT_EQ(AdvantageEstimate::CsvHeader(),
            "trials,wins_b0,wins_b1,advantage,ci_low,ci_high");
  EXPECT_EQ(est.ToCsvRow().substr(0, 6), "4,2,0,");
}

}  // namespace
}  // namespace sdgr
