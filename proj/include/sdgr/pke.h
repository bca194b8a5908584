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

// Probabilistic public-key encryption with message space the whole ring.
//
//   Gen:  pk = a1 h gamma1,                   sk = (a1, gamma1)
//   Enc:  c1 = a2 h gamma2, c2 = m + a2 pk adjunct(gamma2)
//   Dec:  m = c2 - a1 c1 adjunct(gamma1)
//
// Enc takes its randomness (a2, gamma2) explicitly so that it can be re-run
// bit-for-bit by the KEM's decapsulation check.

#ifndef SDGR_PKE_H_
#define SDGR_PKE_H_

#include "sdgr/params.h"

namespace sdgr {

class Rng;

struct PkeKeypair {
  RingElement pk;
  SecretPair sk;
};

struct Ciphertext {
  RingElement c1;
  RingElement c2;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// Throws DomainError if params.h is not a proper public element.
PkeKeypair PkeGen(const Params& params, Rng& rng);

Ciphertext PkeEnc(const Params& params, const RingElement& message,
                  const RingElement& pk, const SecretPair& randomness);

RingElement PkeDec(const SkewRing& ring, const Ciphertext& c,
                   const SecretPair& sk);

}  // namespace sdgr

#endif  // SDGR_PKE_H_
