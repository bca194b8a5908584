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

#include "sdgr/kex.h"

#include "sdgr/errors.h"
#include "sdgr/serialization.h"

namespace sdgr {
namespace {

void PutString(const std::string& s, std::vector<std::uint8_t>& out) {
  const auto len = static_cast<std::uint32_t>(s.size());
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(len >> shift));
  }
  out.insert(out.end(), s.begin(), s.end());
}

std::string GetString(std::span<const std::uint8_t>& in) {
  if (in.size() < 4) throw DomainError("kex message truncated");
  std::uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len = (len << 8) | in[i];
  in = in.subspan(4);
  if (in.size() < len) throw DomainError("kex message truncated");
  std::string s(in.begin(), in.begin() + len);
  in = in.subspan(len);
  return s;
}

}  // namespace

KexKeypair KexKeygen(const Params& params, Rng& rng) {
  params.RequireProperPublicElement();
  SecretPair secret = SampleSecretPair(params.ring(), rng);
  RingElement pk = TwoSidedProduct(params.ring(), secret, params.h());
  return {std::move(secret), std::move(pk)};
}

RingElement KexShared(const Params& params, const SecretPair& secret,
                      const RingElement& peer_pk) {
  params.ring().CheckElement(peer_pk);
  return AdjunctTwoSidedProduct(params.ring(), secret, peer_pk);
}

std::vector<std::uint8_t> SerializeKexMessage(const SkewRing& ring,
                                              const KexMessage& msg) {
  std::vector<std::uint8_t> out;
  PutString(msg.party_id, out);
  PutString(msg.session_id, out);
  AppendRing(ring, msg.pk, out);
  return out;
}

KexMessage ParseKexMessage(const SkewRing& ring,
                           std::span<const std::uint8_t> bytes) {
  KexMessage msg;
  msg.party_id = GetString(bytes);
  msg.session_id = GetString(bytes);
  if (!IsCanonicalRingEncoding(ring, bytes)) {
    throw DomainError("kex message carries a malformed public value");
  }
  msg.pk = DecodeRing(ring, bytes);
  return msg;
}

KexSession::KexSession(Params params, std::string party_id,
                       std::string session_id, Rng& rng)
    : params_(std::move(params)) {
  KexKeypair kp = KexKeygen(params_, rng);
  secret_.emplace(std::move(kp.secret));
  outgoing_ = {std::move(party_id), std::move(session_id),
               std::move(kp.public_value)};
}

RingElement KexSession::Finish(const KexMessage& peer) {
  if (!secret_) throw DomainError("kex session already finished");
  if (peer.session_id != outgoing_.session_id) {
    throw DomainError("kex session id mismatch");
  }
  RingElement key = KexShared(params_, *secret_, peer.pk);
  secret_.reset();
  return key;
}

}  // namespace sdgr
