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


#include "sdgr/message_codec.h"

#include <bit>
#include <string>

#include "sdgr/errors.h"
#include "sdgr/serialization.h"

namespace sdgr {
namespace {

int ChunkBits(const Field& f) { return std::bit_width(f.p()) - 1; }

std::size_t CoefficientSlots(const SkewRing& ring) {
  return ring.dimension() * 2;
}

}  // namespace

std::size_t MessageCapacity(const SkewRing& ring) {
  const std::size_t bits = CoefficientSlots(ring) * ChunkBits(ring.field());
  return bits / 8 < 2 ? 0 : bits / 8 - 2;
}

RingElement EncodeMessage(const SkewRing& ring,
                          std::span<const std::uint8_t> message) {
  const std::size_t capacity = MessageCapacity(ring);
  if (message.size() > capacity || message.size() > 0xFFFF) {
    throw DomainError("message of " + std::to_string(message.size()) +
                      " bytes exceeds the capacity of " +
                      std::to_string(capacity));
  }
  std::vector<std::uint8_t> stream = {
      static_cast<std::uint8_t>(message.size() >> 8),
      static_cast<std::uint8_t>(message.size())};
  stream.insert(stream.end(), message.begin(), message.end());

  const int chunk = ChunkBits(ring.field());
  BitReader reader(stream);
  RingElement out = ring.Zero();
  for (std::size_t slot = 0; slot < CoefficientSlots(ring); ++slot) {
    const std::size_t left = reader.bits_remaining();
    if (left == 0) break;
    std::uint32_t v;
    if (left >= static_cast<std::size_t>(chunk)) {
      v = static_cast<std::uint32_t>(reader.Read(chunk));
    } else {
      const int take = static_cast<int>(left);
      v = static_cast<std::uint32_t>(reader.Read(take) << (chunk - take));
    }
    Fq2& c = out[slot / 2];
    (slot % 2 == 0 ? c.c0 : c.c1) = v;
  }
  return out;
}

std::vector<std::uint8_t> DecodeMessage(const SkewRing& ring,
                                        const RingElement& element) {
  ring.CheckElement(element);
  const int chunk = ChunkBits(ring.field());
  const std::uint32_t limit = 1u << chunk;
  BitWriter writer;
  for (std::size_t slot = 0; slot < CoefficientSlots(ring); ++slot) {
    const Fq2& c = element[slot / 2];
    const std::uint32_t v = slot % 2 == 0 ? c.c0 : c.c1;
    if (v >= limit) throw DomainError("coefficient outside the message alphabet");
    writer.Write(v, chunk);
  }
  const std::vector<std::uint8_t> stream = std::move(writer).Finish();
  if (stream.size() < 2) throw DomainError("ring too small to hold a message");
  const std::size_t length = static_cast<std::size_t>(stream[0]) << 8 | stream[1];
  if (length > MessageCapacity(ring)) {
    throw DomainError("encoded message length is out of range");
  }
  return {stream.begin() + 2, stream.begin() + 2 + static_cast<std::ptrdiff_t>(length)};
}

}  // namespace sdgr
