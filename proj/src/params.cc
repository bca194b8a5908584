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

#include "sdgr/params.h"

#include <array>
#include <string>

#include "sdgr/errors.h"
#include "sdgr/rng.h"

namespace sdgr {
namespace {

constexpr std::array<ParamSet, 5> kParamSets = {{
    {"p19", 19, 1, 19, false},
    {"p23", 23, 1, 23, false},
    {"p31", 31, 1, 31, false},
    {"p41", 41, 1, 41, false},
    {"toy", 3, 1, 3, true},
}};

}  // namespace

std::span<const ParamSet> NamedParamSets() { return kParamSets; }

const ParamSet& FindParamSet(std::string_view name) {
  for (const ParamSet& s : kParamSets) {
    if (s.name == name) return s;
  }
  throw DomainError("unknown parameter set '" + std::string(name) + "'");
}

Params::Params(SkewRing ring, RingElement h)
    : ring_(std::move(ring)), h_(std::move(h)) {
  ring_.CheckElement(h_);
}

Params Params::Generate(std::uint32_t p, std::uint32_t m, std::uint32_t n,
                        Rng& rng) {
  if (n == 0 || n % p != 0) {
    throw DomainError("p must divide n (p = " + std::to_string(p) +
                      ", n = " + std::to_string(n) + ")");
  }
  SkewRing ring(Field::Create(p, m), n);
  RingElement h = ring.GenPublicElement(rng);
  return Params(std::move(ring), std::move(h));
}

Params Params::Generate(const ParamSet& set, Rng& rng) {
  return Generate(set.p, set.m, set.n, rng);
}

bool Params::HasProperPublicElement() const {
  return ring_.Classify(h_) == Subspace::kMixed;
}

void Params::RequireProperPublicElement() const {
  if (!HasProperPublicElement()) {
    throw DomainError("public element h must have non-zero C_n and C_n y parts");
  }
}

SecretPair::SecretPair(const SkewRing& ring, RingElement a, RingElement gamma)
    : a_(std::move(a)), gamma_(ring, std::move(gamma)) {
  const Subspace s = ring.Classify(a_);
  if (s != Subspace::kCnOnly && s != Subspace::kZero) {
    throw DomainError("secret a must lie in F C_n");
  }
}

SecretPair SampleSecretPair(const SkewRing& ring, Rng& rng) {
  RingElement a = ring.SampleCn(rng);
  while (a.IsZero()) a = ring.SampleCn(rng);
  RingElement gamma = ring.SampleGamma(rng);
  while (gamma.IsZero()) gamma = ring.SampleGamma(rng);
  return SecretPair(ring, std::move(a), std::move(gamma));
}

RingElement TwoSidedProduct(const SkewRing& ring, const SecretPair& secret,
                            const RingElement& h) {
  return ring.Product(ring.Product(secret.a(), h), secret.gamma());
}

RingElement AdjunctTwoSidedProduct(const SkewRing& ring,
                                   const SecretPair& secret,
                                   const RingElement& x) {
  return ring.Product(ring.Product(secret.a(), x),
                      ring.Adjunct(secret.gamma()));
}

}  // namespace sdgr
