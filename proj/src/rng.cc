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

#include "sdgr/rng.h"

#include <openssl/rand.h>

#include <algorithm>
#include <bit>
#include <string_view>

#include "sdgr/errors.h"
#include "sdgr/shake.h"

namespace sdgr {
namespace {

constexpr std::string_view kDomain = "sdgr-drbg";

}  // namespace

Rng::Rng(std::span<const std::uint8_t, 32> key) {
  std::copy(key.begin(), key.end(), key_.begin());
}

Rng Rng::FromKey(std::span<const std::uint8_t, 32> key) { return Rng(key); }

Rng Rng::FromSeed(std::uint64_t seed) {
  std::array<std::uint8_t, 32> key{};
  for (int i = 0; i < 8; ++i) {
    key[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  }
  return Rng(key);
}

Rng Rng::FromEntropy() {
  std::array<std::uint8_t, 32> key{};
  if (RAND_bytes(key.data(), static_cast<int>(key.size())) != 1) {
    throw Error("system entropy source unavailable");
  }
  return Rng(key);
}

void Rng::Refill() {
  Shake256 xof;
  xof.Update(std::span(reinterpret_cast<const std::uint8_t*>(kDomain.data()),
                       kDomain.size()));
  xof.Update(key_);
  std::array<std::uint8_t, 8> ctr{};
  for (int i = 0; i < 8; ++i) {
    ctr[i] = static_cast<std::uint8_t>(counter_ >> (8 * i));
  }
  xof.Update(ctr);
  xof.Finish(block_);
  ++counter_;
  pos_ = 0;
}

void Rng::Fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (pos_ == kBlockBytes) Refill();
    const std::size_t take = std::min(out.size() - done, kBlockBytes - pos_);
    std::copy_n(block_.begin() + static_cast<std::ptrdiff_t>(pos_), take,
                out.begin() + static_cast<std::ptrdiff_t>(done));
    pos_ += take;
    done += take;
  }
}

std::uint32_t Rng::NextU32() {
  std::array<std::uint8_t, 4> b{};
  Fill(b);
  return static_cast<std::uint32_t>(b[0]) |
         static_cast<std::uint32_t>(b[1]) << 8 |
         static_cast<std::uint32_t>(b[2]) << 16 |
         static_cast<std::uint32_t>(b[3]) << 24;
}

std::uint64_t Rng::NextU64() {
  const std::uint64_t lo = NextU32();
  return lo | static_cast<std::uint64_t>(NextU32()) << 32;
}

std::uint32_t Rng::UniformBelow(std::uint32_t bound) {
  if (bound == 0) throw DomainError("UniformBelow: bound must be positive");
  if (bound == 1) return 0;
  const int width = std::bit_width(bound - 1);
  const std::uint32_t mask =
      width == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1;
  for (;;) {
    const std::uint32_t v = NextU32() & mask;
    if (v < bound) return v;
  }
}

}  // namespace sdgr
