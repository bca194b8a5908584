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

#ifndef SDGR_RNG_H_
#define SDGR_RNG_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace sdgr {

// Deterministic random bit generator in SHAKE256 counter mode:
//   block_i = SHAKE256("sdgr-drbg" || key || le64(i)), 136 bytes per block.
// A seeded instance produces the same stream on every platform. Instances
// are caller-owned and not thread-safe; give each thread its own.
class Rng {
 public:
  static Rng FromSeed(std::uint64_t seed);
  static Rng FromKey(std::span<const std::uint8_t, 32> key);
  // Keyed from the operating system CSPRNG.
  static Rng FromEntropy();

  void Fill(std::span<std::uint8_t> out);
  std::uint32_t NextU32();
  std::uint64_t NextU64();

  // Uniform in [0, bound) by masked rejection sampling. bound >= 1.
  std::uint32_t UniformBelow(std::uint32_t bound);

 private:
  static constexpr std::size_t kBlockBytes = 136;

  explicit Rng(std::span<const std::uint8_t, 32> key);
  void Refill();

  std::array<std::uint8_t, 32> key_{};
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, kBlockBytes> block_{};
  std::size_t pos_ = kBlockBytes;
};

}  // namespace sdgr

#endif  // SDGR_RNG_H_
