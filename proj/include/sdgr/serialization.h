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

// Canonical binary representation of ring elements.
//
// Coefficients are written in ring index order 0..2n-1, c0 before c1, each as
// a ceil(log2 p)-bit big-endian integer in an MSB-first bit stream. The last
// byte is zero-padded.

#ifndef SDGR_SERIALIZATION_H_
#define SDGR_SERIALIZATION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdgr/skew_ring.h"

namespace sdgr {

class BitWriter {
 public:
  // Appends the low `bits` bits of value, most significant first.
  void Write(std::uint64_t value, int bits);
  std::vector<std::uint8_t> Finish() &&;

 private:
  std::vector<std::uint8_t> bytes_;
  int used_ = 8;  // bits used in bytes_.back()
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
  // Throws DomainError when the stream is exhausted.
  std::uint64_t Read(int bits);
  std::size_t bits_remaining() const { return bytes_.size() * 8 - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::size_t EncodedRingSize(const SkewRing& ring);

std::vector<std::uint8_t> EncodeRing(const SkewRing& ring, const RingElement& a);
void AppendRing(const SkewRing& ring, const RingElement& a,
                std::vector<std::uint8_t>& out);

// Chunks are reduced mod p, so decoding never rejects on values; it throws
// DomainError only when the length differs from EncodedRingSize.
RingElement DecodeRing(const SkewRing& ring, std::span<const std::uint8_t> bytes);

// Whether bytes is exactly the encoding of some element (no chunk >= p and
// zero padding bits).
bool IsCanonicalRingEncoding(const SkewRing& ring,
                             std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> Concat(std::span<const std::uint8_t> a,
                                 std::span<const std::uint8_t> b);

}  // namespace sdgr

#endif  // SDGR_SERIALIZATION_H_
