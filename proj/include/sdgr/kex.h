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

// Two-party key exchange. Each side picks (a, gamma) in F C_n x Gamma, sends
// pk = a h gamma and derives k = a pk_peer adjunct(gamma). Both sides obtain
// a_i a_j h gamma_j adjunct(gamma_i), which is symmetric because F C_n is
// commutative and gamma_j adjunct(gamma_i) = gamma_i adjunct(gamma_j) on Gamma.
//
// Transport authentication is not provided; links are assumed authenticated.

#ifndef SDGR_KEX_H_
#define SDGR_KEX_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdgr/params.h"

namespace sdgr {

class Rng;

struct KexKeypair {
  SecretPair secret;
  RingElement public_value;
};

// Throws DomainError if params.h is not a proper public element.
KexKeypair KexKeygen(const Params& params, Rng& rng);

// a * peer_pk * adjunct(gamma). Throws ParameterMismatch if peer_pk does not
// belong to the ring.
RingElement KexShared(const Params& params, const SecretPair& secret,
                      const RingElement& peer_pk);

struct KexMessage {
  std::string party_id;
  std::string session_id;
  RingElement pk;
};

// u32be(len) party_id || u32be(len) session_id || rep(pk)
std::vector<std::uint8_t> SerializeKexMessage(const SkewRing& ring,
                                              const KexMessage& msg);
// Throws DomainError on malformed input.
KexMessage ParseKexMessage(const SkewRing& ring,
                           std::span<const std::uint8_t> bytes);

// One party's side of a session. The secret pair is erased as soon as the
// key has been derived.
class KexSession {
 public:
  KexSession(Params params, std::string party_id, std::string session_id,
             Rng& rng);

  const KexMessage& outgoing() const { return outgoing_; }
  const std::string& session_id() const { return outgoing_.session_id; }
  bool holds_secret() const { return secret_.has_value(); }

  // Derives the key from the peer's message and erases the secret. Throws
  // DomainError on a session-id mismatch or if already finished.
  RingElement Finish(const KexMessage& peer);

 private:
  Params params_;
  std::optional<SecretPair> secret_;
  KexMessage outgoing_;
};

}  // namespace sdgr

#endif  // SDGR_KEX_H_
