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

#ifndef SDGR_SHAKE_H_
#define SDGR_SHAKE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace sdgr {

// SHAKE256 extendable-output function (FIPS 202). Absorb any number of
// chunks, then squeeze once.
class Shake256 {
 public:
  Shake256();
  ~Shake256();
  Shake256(Shake256&&) noexcept;
  Shake256& operator=(Shake256&&) noexcept;
  Shake256(const Shake256&) = delete;
  Shake256& operator=(const Shake256&) = delete;

  Shake256& Update(std::span<const std::uint8_t> data);
  Shake256& Update(std::uint8_t byte);

  // Writes the first out.size() bytes of the output stream. The object
  // cannot be used again afterwards.
  void Finish(std::span<std::uint8_t> out);
  std::vector<std::uint8_t> Finish(std::size_t out_bytes);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::vector<std::uint8_t> Shake256Digest(std::span<const std::uint8_t> input,
                                         std::size_t out_bytes);

}  // namespace sdgr

#endif  // SDGR_SHAKE_H_
