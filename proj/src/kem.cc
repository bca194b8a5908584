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

#include "sdgr/kem.h"

#include <bit>
#include <string>

#include "sdgr/errors.h"
#include "sdgr/rng.h"
#include "sdgr/serialization.h"
#include "sdgr/shake.h"

namespace sdgr {

KeyLength KeyLengthFromBits(unsigned bits) {
  switch (bits) {
    case 128:
      return KeyLength::k128;
    case 192:
      return KeyLength::k192;
    case 256:
      return KeyLength::k256;
    default:
      throw DomainError("key length must be 128, 192 or 256 bits, got " +
                        std::to_string(bits));
  }
}

std::string ToHex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

std::string SessionKey::Hex() const { return ToHex(bytes); }

std::size_t H1OutputBits(std::uint32_t p, std::uint32_t m, std::uint32_t n) {
  const auto log2p = static_cast<std::size_t>(std::bit_width(p - 1));
  const std::size_t gamma_free = (n + 2) / 2;  // ceil((n+1)/2)
  return log2p * 2 * m * (n + gamma_free);
}

SecretPair H1(const SkewRing& ring, std::span<const std::uint8_t> input) {
  const Field& f = ring.field();
  const std::uint32_t n = ring.n();
  const int w = f.coefficient_bits();
  const std::size_t o = H1OutputBits(f.p(), f.m(), n);
  std::vector<std::uint8_t> x(input.begin(), input.end());
  for (;;) {
    const std::vector<std::uint8_t> stream = Shake256Digest(x, (o + 7) / 8);
    BitReader reader(stream);
    auto next = [&] {
      const std::uint64_t c0 = reader.Read(w);
      return f.Element(c0, reader.Read(w));
    };
    RingElement a = ring.Zero();
    for (std::uint32_t i = 0; i < n; ++i) a[i] = next();
    std::vector<Fq2> free(SkewRing::GammaFreeCount(n));
    for (Fq2& v : free) v = next();
    RingElement gamma = ring.GammaFromFree(free);
    if (!a.IsZero() && !gamma.IsZero()) {
      return SecretPair(ring, std::move(a), std::move(gamma));
    }
    x.push_back(0x00);
  }
}

SessionKey H2(std::span<const std::uint8_t> input, KeyLength l1) {
  Shake256 xof;
  xof.Update(kH2Prefix);
  xof.Update(input);
  return {xof.Finish(KeyBits(l1) / 8)};
}

std::size_t KemCiphertextSize(const SkewRing& ring) {
  return 2 * EncodedRingSize(ring);
}

std::vector<std::uint8_t> EncodeCiphertext(const SkewRing& ring,
                                           const Ciphertext& c) {
  std::vector<std::uint8_t> out;
  out.reserve(KemCiphertextSize(ring));
  AppendRing(ring, c.c1, out);
  AppendRing(ring, c.c2, out);
  return out;
}

std::optional<Ciphertext> DecodeCiphertext(
    const SkewRing& ring, std::span<const std::uint8_t> bytes) {
  const std::size_t half = EncodedRingSize(ring);
  if (bytes.size() != 2 * half) return std::nullopt;
  const auto first = bytes.first(half);
  const auto second = bytes.subspan(half);
  if (!IsCanonicalRingEncoding(ring, first) ||
      !IsCanonicalRingEncoding(ring, second)) {
    return std::nullopt;
  }
  return Ciphertext{DecodeRing(ring, first), DecodeRing(ring, second)};
}

KemKeypair KemKeygen(const Params& params, Rng& rng) {
  PkeKeypair kp = PkeGen(params, rng);
  RingElement s = params.ring().SampleRing(rng);
  std::vector<std::uint8_t> public_key = EncodeRing(params.ring(), kp.pk);
  return {{std::move(s), std::move(kp.sk), std::move(kp.pk)},
          std::move(public_key)};
}

Encapsulation KemEncapsWithMessage(const Params& params,
                                   std::span<const std::uint8_t> public_key,
                                   KeyLength l1, const RingElement& m) {
  const SkewRing& ring = params.ring();
  if (!IsCanonicalRingEncoding(ring, public_key)) {
    throw DomainError("malformed public key encoding");
  }
  const RingElement pk = DecodeRing(ring, public_key);
  const std::vector<std::uint8_t> m_rep = EncodeRing(ring, m);
  const SecretPair r = H1(ring, Concat(m_rep, public_key));
  std::vector<std::uint8_t> c = EncodeCiphertext(ring, PkeEnc(params, m, pk, r));
  SessionKey key = H2(Concat(m_rep, c), l1);
  return {std::move(c), std::move(key)};
}

Encapsulation KemEncaps(const Params& params,
                        std::span<const std::uint8_t> public_key, KeyLength l1,
                        Rng& rng) {
  return KemEncapsWithMessage(params, public_key, l1,
                              params.ring().SampleRing(rng));
}

SessionKey KemDecaps(const Params& params, const KemPrivateKey& key,
                     std::span<const std::uint8_t> ciphertext, KeyLength l1) {
  const SkewRing& ring = params.ring();
  const std::vector<std::uint8_t> s_rep = EncodeRing(ring, key.s);
  const std::optional<Ciphertext> c = DecodeCiphertext(ring, ciphertext);
  if (!c) return H2(Concat(s_rep, ciphertext), l1);

  const RingElement m = PkeDec(ring, *c, key.sk);
  const std::vector<std::uint8_t> m_rep = EncodeRing(ring, m);
  const SecretPair r = H1(ring, Concat(m_rep, EncodeRing(ring, key.pk)));
  if (PkeEnc(params, m, key.pk, r) == *c) {
    return H2(Concat(m_rep, ciphertext), l1);
  }
  return H2(Concat(s_rep, ciphertext), l1);
}

}  // namespace sdgr
