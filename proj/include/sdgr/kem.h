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

// Key encapsulation built from the PKE with the implicit-rejection
// Fujisaki-Okamoto transform:
//
//   Encaps: m <- M; r = H1(rep(m) || rep(pk)); c = Enc(m, pk, r);
//           K = H2(rep(m) || rep(c))
//   Decaps: m' = Dec(c, sk); r' = H1(rep(m') || rep(pk));
//           K = H2(rep(m') || rep(c)) if Enc(m', pk, r') == c
//               H2(rep(s)  || rep(c)) otherwise
//
// H1(x) = SHAKE256(x, o) with o = ceil(log2 p) * 2m * (n + ceil((n+1)/2))
// bits, H2(x) = SHAKE256(0x02 || x, l1). Nothing here is constant time.

#ifndef SDGR_KEM_H_
#define SDGR_KEM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdgr/params.h"
#include "sdgr/pke.h"

namespace sdgr {

class Rng;

inline constexpr std::uint8_t kH2Prefix = 0x02;

enum class KeyLength : std::uint16_t { k128 = 128, k192 = 192, k256 = 256 };

// Throws DomainError unless bits is 128, 192 or 256.
KeyLength KeyLengthFromBits(unsigned bits);
constexpr std::size_t KeyBits(KeyLength l) { return static_cast<std::size_t>(l); }

struct SessionKey {
  std::vector<std::uint8_t> bytes;

  std::size_t bits() const { return bytes.size() * 8; }
  std::string Hex() const;
  friend bool operator==(const SessionKey&, const SessionKey&) = default;
};

std::string ToHex(std::span<const std::uint8_t> bytes);

// Output length o of H1 in bits.
std::size_t H1OutputBits(std::uint32_t p, std::uint32_t m, std::uint32_t n);

// Maps the o-bit SHAKE256 output (read MSB-first) to (a, gamma): n field
// elements for a, then the free coordinates of gamma; every
// ceil(log2 p)-bit chunk is reduced mod p. If a or gamma comes out zero the
// input is extended by one 0x00 byte and hashed again.
SecretPair H1(const SkewRing& ring, std::span<const std::uint8_t> input);

SessionKey H2(std::span<const std::uint8_t> input, KeyLength l1);

struct KemPrivateKey {
  RingElement s;  // implicit-rejection seed
  SecretPair sk;
  RingElement pk;
};

struct KemKeypair {
  KemPrivateKey private_key;
  std::vector<std::uint8_t> public_key;  // rep(pk)
};

struct Encapsulation {
  std::vector<std::uint8_t> ciphertext;  // rep(c1) || rep(c2)
  SessionKey key;
};

KemKeypair KemKeygen(const Params& params, Rng& rng);

// Throws DomainError if the public key is not a canonical encoding.
Encapsulation KemEncaps(const Params& params,
                        std::span<const std::uint8_t> public_key, KeyLength l1,
                        Rng& rng);
// Encapsulation with a caller-chosen message m.
Encapsulation KemEncapsWithMessage(const Params& params,
                                   std::span<const std::uint8_t> public_key,
                                   KeyLength l1, const RingElement& m);

// Never fails on ciphertext content: anything that is not an honest
// encapsulation for this key yields H2(rep(s) || c).
SessionKey KemDecaps(const Params& params, const KemPrivateKey& key,
                     std::span<const std::uint8_t> ciphertext, KeyLength l1);

std::size_t KemCiphertextSize(const SkewRing& ring);
std::vector<std::uint8_t> EncodeCiphertext(const SkewRing& ring,
                                           const Ciphertext& c);
// nullopt unless bytes is the canonical encoding of a ciphertext.
std::optional<Ciphertext> DecodeCiphertext(const SkewRing& ring,
                                           std::span<const std::uint8_t> bytes);

}  // namespace sdgr

#endif  // SDGR_KEM_H_
