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

#include "sdgr/file_format.h"

#include <boost/crc.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>

#include "sdgr/errors.h"
#include "sdgr/serialization.h"

namespace sdgr {
namespace {

constexpr std::uint8_t kMagic[4] = {'S', 'D', 'G', 'R'};

void PutU32(std::uint32_t v, std::vector<std::uint8_t>& out) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

std::uint32_t GetU32(std::span<const std::uint8_t> in) {
  return static_cast<std::uint32_t>(in[0]) << 24 |
         static_cast<std::uint32_t>(in[1]) << 16 |
         static_cast<std::uint32_t>(in[2]) << 8 | in[3];
}

bool KnownKind(std::uint8_t k) {
  return k == 'P' || k == 'K' || k == 'S' || k == 'C';
}

// Splits body into `count` ring encodings.
std::vector<RingElement> SplitRings(const SkewRing& ring,
                                    std::span<const std::uint8_t> body,
                                    std::size_t count) {
  const std::size_t size = EncodedRingSize(ring);
  if (body.size() != size * count) {
    throw CorruptFile("payload has the wrong length");
  }
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto chunk = body.subspan(i * size, size);
    if (!IsCanonicalRingEncoding(ring, chunk)) {
      throw CorruptFile("payload holds a non-canonical ring element");
    }
    out.push_back(DecodeRing(ring, chunk));
  }
  return out;
}

KeyLength L1FromHeader(const FileHeader& h) {
  try {
    return KeyLengthFromBits(static_cast<unsigned>(h.l1_bytes) * 8);
  } catch (const DomainError&) {
    throw CorruptFile("header carries an invalid key length");
  }
}

UnwrappedFile UnwrapForParams(const Params& params, FileKind expected,
                              std::span<const std::uint8_t> bytes) {
  UnwrappedFile file = UnwrapFile(bytes);
  if (file.kind != expected) {
    throw CorruptFile(std::string("expected a '") +
                      static_cast<char>(expected) + "' file, got '" +
                      static_cast<char>(file.kind) + "'");
  }
  const FileHeader want = HeaderFor(params.ring(), file.header.l1_bytes);
  if (file.header != want) {
    throw ParameterMismatch("file was written for different parameters");
  }
  return file;
}

void CheckSameH(const Params& params, const RingElement& h) {
  if (h != params.h()) {
    throw ParameterMismatch("file was written for a different public element h");
  }
}

}  // namespace

FileHeader HeaderFor(const SkewRing& ring, std::uint8_t l1_bytes) {
  return {ring.field().p(), static_cast<std::uint8_t>(ring.field().m()),
          ring.n(), ring.field().lambda(), l1_bytes};
}

std::uint64_t Crc64(std::span<const std::uint8_t> bytes) {
  boost::crc_optimal<64, 0x42F0E1EBA9EA3693ULL, ~0ULL, ~0ULL, true, true> crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

std::vector<std::uint8_t> WrapFile(const FileHeader& header, FileKind kind,
                                   std::span<const std::uint8_t> body) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kFileVersion);
  PutU32(header.p, out);
  out.push_back(header.m);
  PutU32(header.n, out);
  PutU32(header.lambda, out);
  out.push_back(header.l1_bytes);
  out.push_back(static_cast<std::uint8_t>(kind));
  out.insert(out.end(), body.begin(), body.end());
  const std::uint64_t crc = Crc64(out);
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(crc >> shift));
  }
  return out;
}

UnwrappedFile UnwrapFile(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kFileHeaderSize + 1 + kFileTrailerSize) {
    throw CorruptFile("file is truncated");
  }
  const auto content = bytes.first(bytes.size() - kFileTrailerSize);
  std::uint64_t stored = 0;
  for (std::uint8_t b : bytes.last(kFileTrailerSize)) stored = stored << 8 | b;
  if (Crc64(content) != stored) throw CorruptFile("checksum mismatch");
  if (!std::equal(std::begin(kMagic), std::end(kMagic), content.begin())) {
    throw CorruptFile("bad magic");
  }
  if (content[4] != kFileVersion) throw CorruptFile("unsupported version");
  UnwrappedFile file;
  file.header.p = GetU32(content.subspan(5));
  file.header.m = content[9];
  file.header.n = GetU32(content.subspan(10));
  file.header.lambda = GetU32(content.subspan(14));
  file.header.l1_bytes = content[18];
  const std::uint8_t kind = content[kFileHeaderSize];
  if (!KnownKind(kind)) throw CorruptFile("unknown file kind");
  file.kind = static_cast<FileKind>(kind);
  const auto body = content.subspan(kFileHeaderSize + 1);
  file.body.assign(body.begin(), body.end());
  return file;
}

std::vector<std::uint8_t> WriteParamsFile(const Params& params) {
  return WrapFile(HeaderFor(params.ring(), 0), FileKind::kParams,
                  EncodeRing(params.ring(), params.h()));
}

Params ReadParamsFile(std::span<const std::uint8_t> bytes) {
  const UnwrappedFile file = UnwrapFile(bytes);
  if (file.kind != FileKind::kParams) throw CorruptFile("not a parameter file");
  const FileHeader& h = file.header;
  std::optional<SkewRing> ring;
  try {
    ring.emplace(Field::Create(h.p, h.m), h.n);
  } catch (const DomainError& e) {
    throw CorruptFile(std::string("invalid parameters: ") + e.what());
  }
  if (ring->field().lambda() != h.lambda || h.l1_bytes != 0 ||
      h.n % h.p != 0) {
    throw CorruptFile("inconsistent parameter header");
  }
  std::vector<RingElement> parts = SplitRings(*ring, file.body, 1);
  return Params(std::move(*ring), std::move(parts[0]));
}

std::vector<std::uint8_t> WritePublicKeyFile(
    const Params& params, KeyLength l1, std::span<const std::uint8_t> public_key) {
  std::vector<std::uint8_t> body = EncodeRing(params.ring(), params.h());
  body.insert(body.end(), public_key.begin(), public_key.end());
  return WrapFile(HeaderFor(params.ring(), KeyBits(l1) / 8),
                  FileKind::kPublicKey, body);
}

PublicKeyFile ReadPublicKeyFile(const Params& params,
                                std::span<const std::uint8_t> bytes) {
  const UnwrappedFile file = UnwrapForParams(params, FileKind::kPublicKey, bytes);
  const KeyLength l1 = L1FromHeader(file.header);
  const std::vector<RingElement> parts = SplitRings(params.ring(), file.body, 2);
  CheckSameH(params, parts[0]);
  return {l1, EncodeRing(params.ring(), parts[1])};
}

std::vector<std::uint8_t> WritePrivateKeyFile(const Params& params,
                                              KeyLength l1,
                                              const KemPrivateKey& key) {
  const SkewRing& ring = params.ring();
  std::vector<std::uint8_t> body;
  AppendRing(ring, params.h(), body);
  AppendRing(ring, key.s, body);
  AppendRing(ring, key.sk.a(), body);
  AppendRing(ring, key.sk.gamma(), body);
  AppendRing(ring, key.pk, body);
  return WrapFile(HeaderFor(ring, KeyBits(l1) / 8), FileKind::kPrivateKey, body);
}

PrivateKeyFile ReadPrivateKeyFile(const Params& params,
                                  std::span<const std::uint8_t> bytes) {
  const UnwrappedFile file = UnwrapForParams(params, FileKind::kPrivateKey, bytes);
  const KeyLength l1 = L1FromHeader(file.header);
  std::vector<RingElement> parts = SplitRings(params.ring(), file.body, 5);
  CheckSameH(params, parts[0]);
  try {
    SecretPair sk(params.ring(), std::move(parts[2]), std::move(parts[3]));
    return {l1, {std::move(parts[1]), std::move(sk), std::move(parts[4])}};
  } catch (const DomainError& e) {
    throw CorruptFile(std::string("malformed secret key: ") + e.what());
  }
}

std::vector<std::uint8_t> WriteCiphertextFile(
    const Params& params, KeyLength l1, std::span<const std::uint8_t> ciphertext) {
  return WrapFile(HeaderFor(params.ring(), KeyBits(l1) / 8),
                  FileKind::kCiphertext, ciphertext);
}

CiphertextFile ReadCiphertextFile(const Params& params,
                                  std::span<const std::uint8_t> bytes) {
  UnwrappedFile file = UnwrapForParams(params, FileKind::kCiphertext, bytes);
  // The body is handed to decapsulation as-is, so no canonical-form check
  // here: a non-canonical ciphertext takes the implicit-rejection path.
  return {L1FromHeader(file.header), std::move(file.body)};
}

std::vector<std::uint8_t> ReadBinaryFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteBinaryFile(const std::filesystem::path& path,
                     std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write to " + path.string() + " failed");
}

}  // namespace sdgr
