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

#include "sdgr/serialization.h"

#include <algorithm>
#include <string>

#include "sdgr/errors.h"

namespace sdgr {

void BitWriter::Write(std::uint64_t value, int bits) {
  for (int b = bits - 1; b >= 0; --b) {
    if (used_ == 8) {
      bytes_.push_back(0);
      used_ = 0;
    }
    if ((value >> b) & 1) {
      bytes_.back() |= static_cast<std::uint8_t>(0x80u >> used_);
    }
    ++used_;
  }
}

std::vector<std::uint8_t> BitWriter::Finish() && { return std::move(bytes_); }

std::uint64_t BitReader::Read(int bits) {
  if (static_cast<std::size_t>(bits) > bits_remaining()) {
    throw DomainError("bit stream exhausted");
  }
  std::uint64_t v = 0;
  for (int b = 0; b < bits; ++b, ++pos_) {
    const std::uint8_t byte = bytes_[pos_ / 8];
    v = (v << 1) | ((byte >> (7 - pos_ % 8)) & 1u);
  }
  return v;
}

std::size_t EncodedRingSize(const SkewRing& ring) {
  const std::size_t bits =
      ring.dimension() * 2 * static_cast<std::size_t>(ring.field().coefficient_bits());
  return (bits + 7) / 8;
}

void AppendRing(const SkewRing& ring, const RingElement& a,
                std::vector<std::uint8_t>& out) {
  ring.CheckElement(a);
  const int w = ring.field().coefficient_bits();
  BitWriter writer;
  for (const Fq2& c : a.coeffs()) {
    writer.Write(c.c0, w);
    writer.Write(c.c1, w);
  }
  const std::vector<std::uint8_t> bytes = std::move(writer).Finish();
  out.insert(out.end(), bytes.begin(), bytes.end());
}

std::vector<std::uint8_t> EncodeRing(const SkewRing& ring,
                                     const RingElement& a) {
  std::vector<std::uint8_t> out;
  out.reserve(EncodedRingSize(ring));
  AppendRing(ring, a, out);
  return out;
}

RingElement DecodeRing(const SkewRing& ring,
                       std::span<const std::uint8_t> bytes) {
  if (bytes.size() != EncodedRingSize(ring)) {
    throw DomainError("encoded ring element must be " +
                      std::to_string(EncodedRingSize(ring)) + " bytes, got " +
                      std::to_string(bytes.size()));
  }
  const int w = ring.field().coefficient_bits();
  const Field& f = ring.field();
  BitReader reader(bytes);
  RingElement a = ring.Zero();
  for (std::size_t i = 0; i < ring.dimension(); ++i) {
    const std::uint64_t c0 = reader.Read(w);
    a[i] = f.Element(c0, reader.Read(w));
  }
  return a;
}

bool IsCanonicalRingEncoding(const SkewRing& ring,
                             std::span<const std::uint8_t> bytes) {
  if (bytes.size() != EncodedRingSize(ring)) return false;
  const std::vector<std::uint8_t> again = EncodeRing(ring, DecodeRing(ring, bytes));
  return std::equal(again.begin(), again.end(), bytes.begin(), bytes.end());
}

std::vector<std::uint8_t> Concat(std::span<const std::uint8_t> a,
                                 std::span<const std::uint8_t> b) {
  std::vector<std::uint8_t> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace sdgr
