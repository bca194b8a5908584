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

#ifndef SDGR_PARAMS_H_
#define SDGR_PARAMS_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "sdgr/skew_ring.h"

namespace sdgr {

class Rng;

struct ParamSet {
  std::string_view name;
  std::uint32_t p;
  std::uint32_t m;
  std::uint32_t n;
  // Small enough for exhaustive search; not for real use.
  bool desk_scale_only;
};

// p19, p23, p31, p41 and the toy set (p = n = 3).
std::span<const ParamSet> NamedParamSets();
// Throws DomainError for an unknown name.
const ParamSet& FindParamSet(std::string_view name);

// Public parameters: the ring plus the public element h.
class Params {
 public:
  // Throws ParameterMismatch if h does not belong to the ring. Any h is
  // accepted here; schemes check HasProperPublicElement themselves.
  Params(SkewRing ring, RingElement h);

  // Builds the ring for (p, m, n) and draws h. Requires p | n.
  static Params Generate(std::uint32_t p, std::uint32_t m, std::uint32_t n,
                         Rng& rng);
  static Params Generate(const ParamSet& set, Rng& rng);

  const SkewRing& ring() const { return ring_; }
  const RingElement& h() const { return h_; }

  // h has non-zero parts in both C_n and C_n y.
  bool HasProperPublicElement() const;
  // Throws DomainError otherwise.
  void RequireProperPublicElement() const;

  friend bool operator==(const Params& a, const Params& b) {
    return a.ring_ == b.ring_ && a.h_ == b.h_;
  }

 private:
  SkewRing ring_;
  RingElement h_;
};

// (a, gamma) in F C_n x Gamma.
class SecretPair {
 public:
  // Throws DomainError if a has support outside C_n or gamma is not in Gamma.
  SecretPair(const SkewRing& ring, RingElement a, RingElement gamma);

  const RingElement& a() const { return a_; }
  const RingElement& gamma() const { return gamma_.element(); }
  bool IsDegenerate() const { return a_.IsZero() || gamma_.IsZero(); }

  friend bool operator==(const SecretPair&, const SecretPair&) = default;

 private:
  RingElement a_;
  ReversibleElement gamma_;
};

// Uniform over (F C_n \ {0}) x (Gamma \ {0}); zero draws are resampled.
SecretPair SampleSecretPair(const SkewRing& ring, Rng& rng);

// a * h * gamma.
RingElement TwoSidedProduct(const SkewRing& ring, const SecretPair& secret,
                            const RingElement& h);

// a * x * adjunct(gamma): the shared-key side of the two-sided product.
RingElement AdjunctTwoSidedProduct(const SkewRing& ring,
                                   const SecretPair& secret,
                                   const RingElement& x);

}  // namespace sdgr

#endif  // SDGR_PARAMS_H_
