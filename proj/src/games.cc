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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "sdgr/errors.h"
#include "sdgr/rng.h"
#include "sdgr/serialization.h"
#include "sdgr/shake.h"

namespace sdgr {
namespace {

std::uint64_t SaturatingPow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// The index-th element of F_{q^2}^count in mixed radix p^2, first coordinate
// least significant.
void DecodeDigits(std::uint64_t index, const Field& f, std::span<Fq2> out) {
  const std::uint64_t p = f.p();
  for (Fq2& v : out) {
    const auto c0 = static_cast<std::uint32_t>(index % p);
    index /= p;
    const auto c1 = static_cast<std::uint32_t>(index % p);
    index /= p;
    v = {c0, c1};
  }
}

}  // namespace

SdpdChallenge MakeSdpdChallenge(const Params& params, Rng& rng) {
  SecretPair witness = SampleSecretPair(params.ring(), rng);
  RingElement pk = TwoSidedProduct(params.ring(), witness, params.h());
  return {{params, std::move(pk)}, std::move(witness)};
}

bool SdpdVerify(const SdpdInstance& instance, const SecretPair& candidate) {
  const SkewRing& ring = instance.params.ring();
  return TwoSidedProduct(ring, candidate, instance.params.h()) == instance.pk;
}

std::uint64_t SdpdSearchSpace(const SkewRing& ring) {
  const std::uint64_t per_elem = SaturatingPow(ring.field().p(), 2 * ring.field().m());
  return SaturatingMul(SaturatingPow(per_elem, ring.n()),
                       SaturatingPow(per_elem, SkewRing::GammaFreeCount(ring.n())));
}

std::vector<SecretPair> SdpdBruteForce(const SdpdInstance& instance,
                                       unsigned threads) {
  const SkewRing& ring = instance.params.ring();
  const Field& f = ring.field();
  const std::uint64_t space = SdpdSearchSpace(ring);
  if (space > kBruteForceGuard) {
    throw SearchSpaceTooLarge("SDPD search space " + std::to_string(space) +
                              " exceeds the guard of " +
                              std::to_string(kBruteForceGuard));
  }
  const std::uint64_t per_elem = SaturatingPow(f.p(), 2);
  const std::uint64_t a_count = SaturatingPow(per_elem, ring.n());
  const std::uint32_t gfree = SkewRing::GammaFreeCount(ring.n());
  const std::uint64_t g_count = SaturatingPow(per_elem, gfree);

  std::vector<RingElement> gammas;
  gammas.reserve(g_count);
  {
    std::vector<Fq2> free(gfree);
    for (std::uint64_t gi = 0; gi < g_count; ++gi) {
      DecodeDigits(gi, f, free);
      gammas.push_back(ring.GammaFromFree(free));
    }
  }

  threads = std::max(1u, threads);
  std::vector<std::vector<SecretPair>> found(threads);
  auto work = [&](unsigned t) {
    const std::uint64_t begin = a_count * t / threads;
    const std::uint64_t end = a_count * (t + 1) / threads;
    std::vector<Fq2> digits(ring.n());
    for (std::uint64_t ai = begin; ai < end; ++ai) {
      DecodeDigits(ai, f, digits);
      RingElement a = ring.Zero();
      for (std::uint32_t i = 0; i < ring.n(); ++i) a[i] = digits[i];
      const RingElement ah = ring.Product(a, instance.params.h());
      for (const RingElement& g : gammas) {
        if (ring.Product(ah, g) == instance.pk) {
          found[t].emplace_back(ring, a, g);
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  std::vector<SecretPair> out;
  for (auto& part : found) {
    for (auto& s : part) out.push_back(std::move(s));
  }
  return out;
}

CsdpChallenge MakeCsdpChallenge(const Params& params, Rng& rng) {
  const SkewRing& ring = params.ring();
  SecretPair s1 = SampleSecretPair(ring, rng);
  SecretPair s2 = SampleSecretPair(ring, rng);
  RingElement pk1 = TwoSidedProduct(ring, s1, params.h());
  RingElement pk2 = TwoSidedProduct(ring, s2, params.h());
  RingElement key = AdjunctTwoSidedProduct(ring, s2, pk1);
  return {{params, std::move(pk1), std::move(pk2)},
          std::move(s1),
          std::move(s2),
          std::move(key)};
}

bool CsdpVerify(const CsdpChallenge& challenge, const RingElement& candidate) {
  return candidate == challenge.key;
}

RingElement CsdpKeyFromWitness(const CsdpInstance& instance,
                               const SecretPair& witness_for_pk2) {
  return AdjunctTwoSidedProduct(instance.params.ring(), witness_for_pk2,
                                instance.pk1);
}

RingElement CsdpBruteForce(const CsdpInstance& instance) {
  const std::vector<SecretPair> witnesses =
      SdpdBruteForce({instance.params, instance.pk2});
  if (witnesses.empty()) throw Error("pk2 has no SDPD preimage");
  return CsdpKeyFromWitness(instance, witnesses.front());
}

DsdpInstance MakeDsdpInstance(const Params& params, int b, Rng& rng) {
  if (b != 0 && b != 1) throw DomainError("DSDP bit must be 0 or 1");
  const SkewRing& ring = params.ring();
  const SecretPair s1 = SampleSecretPair(ring, rng);
  const SecretPair s2 = SampleSecretPair(ring, rng);
  const SecretPair s3 = SampleSecretPair(ring, rng);
  RingElement pk1 = TwoSidedProduct(ring, s1, params.h());
  RingElement pk2 = TwoSidedProduct(ring, s2, params.h());
  RingElement k = b == 0 ? AdjunctTwoSidedProduct(ring, s2, pk1)
                         : TwoSidedProduct(ring, s3, params.h());
  return {params, std::move(pk1), std::move(pk2), std::move(k), b};
}

std::uint32_t LocalValuation(const SkewRing& ring, const RingElement& a) {
  const std::uint32_t n = ring.n();
  const Field& f = ring.field();
  if (n != f.p()) throw DomainError("valuation needs n == p");
  const Subspace s = ring.Classify(a);
  if (s == Subspace::kZero) return n;
  if (s == Subspace::kMixed) throw DomainError("valuation needs a homogeneous element");
  const std::uint32_t offset = s == Subspace::kCnOnly ? 0 : n;
  // Coefficient of u^j in sum_i a_i (1 + u)^i is sum_i binom(i, j) a_i.
  std::vector<std::uint32_t> binom(n, 0);
  std::vector<Fq2> u(n, f.Zero());
  binom[0] = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i > 0) {
      for (std::uint32_t j = i; j > 0; --j) binom[j] = f.AddFp(binom[j], binom[j - 1]);
    }
    for (std::uint32_t j = 0; j <= i; ++j) {
      u[j] = f.Add(u[j], f.Mul(a[offset + i], {binom[j], 0}));
    }
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    if (!u[j].IsZero()) return j;
  }
  return n;
}

int PlainSubspaceDistinguisher(const DsdpInstance& instance) {
  const SkewRing& ring = instance.params.ring();
  const Subspace h_space = ring.Classify(instance.params.h());
  const Subspace k_space = ring.Classify(instance.k);
  if (h_space == Subspace::kCnOnly) return k_space == Subspace::kCnYOnly ? 1 : 0;
  if (h_space == Subspace::kCnYOnly) return k_space == Subspace::kCnOnly ? 1 : 0;
  return HashCoin(instance);
}

int SubspaceDistinguisher(const DsdpInstance& instance) {
  const SkewRing& ring = instance.params.ring();
  const Subspace h_space = ring.Classify(instance.params.h());
  const bool degenerate =
      h_space == Subspace::kCnOnly || h_space == Subspace::kCnYOnly;
  if (!degenerate || !instance.k.IsZero() || ring.n() != ring.field().p() ||
      instance.pk1.IsZero() || instance.pk2.IsZero()) {
    return PlainSubspaceDistinguisher(instance);
  }
  // val(k0) = val(pk1) + val(pk2) - val(h), so a zero k with a smaller sum
  // cannot be k0.
  const std::uint32_t sum = LocalValuation(ring, instance.pk1) +
                            LocalValuation(ring, instance.pk2);
  return sum < ring.n() + LocalValuation(ring, instance.params.h()) ? 1 : 0;
}

int HashCoin(const DsdpInstance& instance) {
  const SkewRing& ring = instance.params.ring();
  Shake256 xof;
  xof.Update(EncodeRing(ring, instance.pk1));
  xof.Update(EncodeRing(ring, instance.pk2));
  xof.Update(EncodeRing(ring, instance.k));
  return xof.Finish(1)[0] & 1;
}

Distinguisher MakeCsdpDistinguisher(
    std::function<RingElement(const CsdpInstance&)> csdp_solver) {
  return [solver = std::move(csdp_solver)](const DsdpInstance& inst) {
    const RingElement k0 = solver({inst.params, inst.pk1, inst.pk2});
    return k0 == inst.k ? 0 : 1;
  };
}

Interval WilsonInterval(std::uint64_t successes, std::uint64_t trials,
                        double z) {
  if (trials == 0) return {0, 1};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double centre = (phat + z2 / (2 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::string AdvantageEstimate::ToKeyValue() const {
  std::ostringstream os;
  os << "trials=" << trials << "\n"
     << "trials_b0=" << trials_b0 << "\n"
     << "trials_b1=" << trials_b1 << "\n"
     << "wins_b0=" << ones_b0 << "\n"
     << "wins_b1=" << ones_b1 << "\n"
     << "pr_w0=" << pr_w0 << "\n"
     << "pr_w1=" << pr_w1 << "\n"
     << "advantage=" << advantage << "\n"
     << "ci_low=" << difference_ci.low << "\n"
     << "ci_high=" << difference_ci.high << "\n";
  return os.str();
}

std::string AdvantageEstimate::CsvHeader() {
  return "trials,wins_b0,wins_b1,advantage,ci_low,ci_high";
}

std::string AdvantageEstimate::ToCsvRow() const {
  std::ostringstream os;
  os << trials << "," << ones_b0 << "," << ones_b1 << "," << advantage << ","
     << difference_ci.low << "," << difference_ci.high;
  return os.str();
}

AdvantageEstimate DsdpExperiment(const Params& params,
                                 const Distinguisher& distinguisher,
                                 std::uint64_t trials, Rng& rng) {
  if (trials == 0) throw DomainError("DSDP experiment needs at least one trial");
  AdvantageEstimate est;
  est.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int b = static_cast<int>(t % 2);
    const int guess = distinguisher(MakeDsdpInstance(params, b, rng));
    if (b == 0) {
      ++est.trials_b0;
      est.ones_b0 += guess == 1;
    } else {
      ++est.trials_b1;
      est.ones_b1 += guess == 1;
    }
  }
  est.pr_w0 = est.trials_b0 ? static_cast<double>(est.ones_b0) / est.trials_b0 : 0;
  est.pr_w1 = est.trials_b1 ? static_cast<double>(est.ones_b1) / est.trials_b1 : 0;
  const double diff = est.pr_w0 - est.pr_w1;
  est.advantage = std::fabs(diff);
  const Interval w0 = WilsonInterval(est.ones_b0, est.trials_b0);
  const Interval w1 = WilsonInterval(est.ones_b1, est.trials_b1);
  est.difference_ci = {
      diff - std::sqrt((est.pr_w0 - w0.low) * (est.pr_w0 - w0.low) +
                       (w1.high - est.pr_w1) * (w1.high - est.pr_w1)),
      diff + std::sqrt((w0.high - est.pr_w0) * (w0.high - est.pr_w0) +
                       (est.pr_w1 - w1.low) * (est.pr_w1 - w1.low))};
  return est;
}

Params DegenerateParams(const SkewRing& ring, bool keep_cn, Rng& rng) {
  RingElement h = keep_cn ? ring.SampleCn(rng) : ring.SampleCnY(rng);
  while (h.IsZero()) h = keep_cn ? ring.SampleCn(rng) : ring.SampleCnY(rng);
  return Params(ring, std::move(h));
}

}  // namespace sdgr
