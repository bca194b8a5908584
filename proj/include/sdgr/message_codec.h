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

// Demo-only packing of byte strings into ring elements, so the PKE can be
// exercised on text. Not part of any scheme: the message space is the ring.
//
// The stream u16be(length) || bytes is cut into floor(log2 p)-bit chunks,
// each stored in one F_p coefficient (c0 then c1, index order), zero-padded.

#ifndef SDGR_MESSAGE_CODEC_H_
#define SDGR_MESSAGE_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdgr/skew_ring.h"

namespace sdgr {

std::size_t MessageCapacity(const SkewRing& ring);

// Throws DomainError if the message exceeds MessageCapacity.
RingElement EncodeMessage(const SkewRing& ring,
                          std::span<const std::uint8_t> message);

// Throws DomainError if the element does not hold a valid encoding.
std::vector<std::uint8_t> DecodeMessage(const SkewRing& ring,
                                        const RingElement& element);

}  // namespace sdgr

#endif  // SDGR_MESSAGE_CODEC_H_
