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

#include "sdgr/pke.h"

namespace sdgr {

PkeKeypair PkeGen(const Params& params, Rng& rng) {
  params.RequireProperPublicElement();
  SecretPair sk = SampleSecretPair(params.ring(), rng);
  RingElement pk = TwoSidedProduct(params.ring(), sk, params.h());
  return {std::move(pk), std::move(sk)};
}

Ciphertext PkeEnc(const Params& params, const RingElement& message,
                  const RingElement& pk, const SecretPair& randomness) {
  const SkewRing& ring = params.ring();
  ring.CheckElement(message);
  ring.CheckElement(pk);
  RingElement c1 = TwoSidedProduct(ring, randomness, params.h());
  RingElement mask = AdjunctTwoSidedProduct(ring, randomness, pk);
  return {std::move(c1), ring.Add(message, mask)};
}

RingElement PkeDec(const SkewRing& ring, const Ciphertext& c,
                   const SecretPair& sk) {
  ring.CheckElement(c.c1);
  ring.CheckElement(c.c2);
  return ring.Sub(c.c2, AdjunctTwoSidedProduct(ring, sk, c.c1));
}

}  // namespace sdgr
