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

// Challengers for the three attack games on two-sided products, plus
// desk-scale attacks used as sanity checks:
//
//   SDPD  given pk = a h gamma, find any (a', gamma') with a' h gamma' = pk
//   CSDP  given pk1, pk2, compute k = a2 pk1 adjunct(gamma2)
//   DSDP  given pk1, pk2, k_b, tell k_0 = a2 pk1 adjunct(gamma2) from
//         k_1 = a3 h gamma3
//
// None of this says anything about security at real parameter sizes.

#ifndef SDGR_GAMES_H_
#define SDGR_GAMES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sdgr/params.h"

namespace sdgr {

class Rng;

// ---- SDPD ------------------------------------------------------------------

struct SdpdInstance {
  Params params;
  RingElement pk;
};

struct SdpdChallenge {
  SdpdInstance instance;
  SecretPair witness;
};

SdpdChallenge MakeSdpdChallenge(const Params& params, Rng& rng);

// a' h gamma' == pk. Equality of products, not of witnesses.
bool SdpdVerify(const SdpdInstance& instance, const SecretPair& candidate);

inline constexpr std::uint64_t kBruteForceGuard = 100'000'000;

// |F C_n| * |Gamma| = p^(2mn) * p^(2m ceil((n+1)/2)), saturated at
// UINT64_MAX.
std::uint64_t SdpdSearchSpace(const SkewRing& ring);

// Every (a', gamma') in F C_n x Gamma with a' h gamma' = pk, in enumeration
// order. The a' range is split over `threads` workers; the merged output does
// not depend on the thread count. Throws SearchSpaceTooLarge above the guard.
std::vector<SecretPair> SdpdBruteForce(const SdpdInstance& instance,
                                       unsigned threads = 1);

// ---- CSDP ------------------------------------------------------------------

struct CsdpInstance {
  Params params;
  RingElement pk1;
  RingElement pk2;
};

struct CsdpChallenge {
  CsdpInstance instance;
  SecretPair secret1;
  SecretPair secret2;
  RingElement key;  // a2 pk1 adjunct(gamma2)
};

CsdpChallenge MakeCsdpChallenge(const Params& params, Rng& rng);
bool CsdpVerify(const CsdpChallenge& challenge, const RingElement& candidate);

// a' pk1 adjunct(gamma') for an SDPD solution (a', gamma') of pk2. Any
// solution gives the CSDP key.
RingElement CsdpKeyFromWitness(const CsdpInstance& instance,
                               const SecretPair& witness_for_pk2);

// Solves CSDP by brute-forcing SDPD on pk2 (toy sizes only).
RingElement CsdpBruteForce(const CsdpInstance& instance);

// ---- DSDP ------------------------------------------------------------------

struct DsdpInstance {
  Params params;
  RingElement pk1;
  RingElement pk2;
  RingElement k;
  // The challenger's bit. Honest distinguishers must not read it.
  int hidden_bit = 0;
};

// Runs experiment b (0 or 1) of the decisional game. Works with any h,
// including degenerate ones.
DsdpInstance MakeDsdpInstance(const Params& params, int b, Rng& rng);

using Distinguisher = std::function<int(const DsdpInstance&)>;

// Membership test from the subspace structure. For h in F C_n, k_0 lies in
// F C_n and k_1 in F C_n y; for h in F C_n y it is the other way round. The
// guess is 1 iff k_b is a non-zero element of k_1's subspace. For a proper
// (mixed) h the test carries no information and the guess is HashCoin.
int PlainSubspaceDistinguisher(const DsdpInstance& instance);

// The membership test with a tie-break for k_b = 0, which lies in both
// subspaces. When n = p, F C_n is the local ring F[u]/(u^n) with u = x - 1,
// and valuations add over products of homogeneous elements, so
// val(k_0) = val(pk1) + val(pk2) - val(h). A zero k_b whose public values
// make that sum smaller than n cannot be k_0, and the guess is 1. Otherwise
// this is PlainSubspaceDistinguisher.
int SubspaceDistinguisher(const DsdpInstance& instance);

// A coin derived from SHAKE256(rep(pk1) || rep(pk2) || rep(k)).
int HashCoin(const DsdpInstance& instance);

// Order of vanishing at x = 1 of a homogeneous element (a in F C_n, or
// a = g y with g in F C_n, measured on g); n for zero. Throws DomainError
// unless n == p and a is homogeneous.
std::uint32_t LocalValuation(const SkewRing& ring, const RingElement& a);

// Guesses 0 iff the CSDP solver's key equals k_b.
Distinguisher MakeCsdpDistinguisher(
    std::function<RingElement(const CsdpInstance&)> csdp_solver);

struct Interval {
  double low = 0;
  double high = 0;
  bool Contains(double v) const { return low <= v && v <= high; }
  double width() const { return high - low; }
};

inline constexpr double kZ95 = 1.959963984540054;

Interval WilsonInterval(std::uint64_t successes, std::uint64_t trials,
                        double z = kZ95);

struct AdvantageEstimate {
  std::uint64_t trials = 0;
  std::uint64_t trials_b0 = 0;
  std::uint64_t trials_b1 = 0;
  std::uint64_t ones_b0 = 0;  // distinguisher output 1 in experiment 0
  std::uint64_t ones_b1 = 0;
  double pr_w0 = 0;
  double pr_w1 = 0;
  double advantage = 0;  // |pr_w0 - pr_w1|
  Interval difference_ci;  // 95% CI on pr_w0 - pr_w1 (Newcombe hybrid score)

  std::string ToKeyValue() const;
  static std::string CsvHeader();
  std::string ToCsvRow() const;
};

// Alternates experiments 0 and 1 over `trials` runs. Throws DomainError for
// trials == 0.
AdvantageEstimate DsdpExperiment(const Params& params,
                                 const Distinguisher& distinguisher,
                                 std::uint64_t trials, Rng& rng);

// Params with the same ring and h = h1 + 0 (keep_cn) or h = 0 + h2.
Params DegenerateParams(const SkewRing& ring, bool keep_cn, Rng& rng);

}  // namespace sdgr

#endif  // SDGR_GAMES_H_
