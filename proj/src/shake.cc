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

#include "sdgr/shake.h"

#include <openssl/evp.h>

#include "sdgr/errors.h"

namespace sdgr {

struct Shake256::State {
  EVP_MD_CTX* ctx = nullptr;
  bool finished = false;

  State() : ctx(EVP_MD_CTX_new()) {
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_shake256(), nullptr) != 1) {
      EVP_MD_CTX_free(ctx);
      throw Error("SHAKE256: OpenSSL initialisation failed");
    }
  }
  ~State() { EVP_MD_CTX_free(ctx); }
};

Shake256::Shake256() : state_(std::make_unique<State>()) {}
Shake256::~Shake256() = default;
Shake256::Shake256(Shake256&&) noexcept = default;
Shake256& Shake256::operator=(Shake256&&) noexcept = default;

Shake256& Shake256::Update(std::span<const std::uint8_t> data) {
  if (state_->finished) throw Error("SHAKE256: update after finish");
  if (!data.empty() &&
      EVP_DigestUpdate(state_->ctx, data.data(), data.size()) != 1) {
    throw Error("SHAKE256: update failed");
  }
  return *this;
}

Shake256& Shake256::Update(std::uint8_t byte) {
  return Update(std::span<const std::uint8_t>(&byte, 1));
}

void Shake256::Finish(std::span<std::uint8_t> out) {
  if (state_->finished) throw Error("SHAKE256: finish called twice");
  state_->finished = true;
  if (out.empty()) return;
  if (EVP_DigestFinalXOF(state_->ctx, out.data(), out.size()) != 1) {
    throw Error("SHAKE256: squeeze failed");
  }
}

std::vector<std::uint8_t> Shake256::Finish(std::size_t out_bytes) {
  std::vector<std::uint8_t> out(out_bytes);
  Finish(std::span<std::uint8_t>(out));
  return out;
}

std::vector<std::uint8_t> Shake256Digest(std::span<const std::uint8_t> input,
                                         std::size_t out_bytes) {
  Shake256 xof;
  xof.Update(input);
  return xof.Finish(out_bytes);
}

}  // namespace sdgr
