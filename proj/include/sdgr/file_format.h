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

// On-disk container for parameters, keys and ciphertexts.
//
//   offset  size  field
//   0       4     magic "SDGR"
//   4       1     version 0x01
//   5       4     p       (big-endian)
//   9       1     m
//   10      4     n       (big-endian)
//   14      4     lambda  (big-endian)
//   18      1     l1 / 8  (0 for parameter files)
//   19      ...   payload; first byte is the FileKind tag
//   end-8   8     CRC-64/XZ of everything before it (big-endian)
//
// Payloads:
//   params       'P' rep(h)
//   public key   'K' rep(h) rep(pk)
//   private key  'S' rep(h) rep(s) rep(a) rep(gamma) rep(pk)
//   ciphertext   'C' rep(c1) rep(c2)

#ifndef SDGR_FILE_FORMAT_H_
#define SDGR_FILE_FORMAT_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sdgr/kem.h"
#include "sdgr/params.h"

namespace sdgr {

inline constexpr std::uint8_t kFileVersion = 0x01;
inline constexpr std::size_t kFileHeaderSize = 19;
inline constexpr std::size_t kFileTrailerSize = 8;

enum class FileKind : std::uint8_t {
  kParams = 'P',
  kPublicKey = 'K',
  kPrivateKey = 'S',
  kCiphertext = 'C',
};

struct FileHeader {
  std::uint32_t p = 0;
  std::uint8_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t lambda = 0;
  std::uint8_t l1_bytes = 0;

  friend bool operator==(const FileHeader&, const FileHeader&) = default;
};

FileHeader HeaderFor(const SkewRing& ring, std::uint8_t l1_bytes);

// CRC-64/XZ.
std::uint64_t Crc64(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> WrapFile(const FileHeader& header, FileKind kind,
                                   std::span<const std::uint8_t> body);

struct UnwrappedFile {
  FileHeader header;
  FileKind kind;
  std::vector<std::uint8_t> body;  // payload without the kind tag
};

// Throws CorruptFile on truncation, bad magic/version, unknown kind or
// checksum failure.
UnwrappedFile UnwrapFile(std::span<const std::uint8_t> bytes);

// Typed views. The Read* functions throw CorruptFile for structural damage,
// ParameterMismatch when the file belongs to different parameters than
// `params`.
std::vector<std::uint8_t> WriteParamsFile(const Params& params);
Params ReadParamsFile(std::span<const std::uint8_t> bytes);

struct PublicKeyFile {
  KeyLength l1;
  std::vector<std::uint8_t> public_key;
};
std::vector<std::uint8_t> WritePublicKeyFile(const Params& params, KeyLength l1,
                                             std::span<const std::uint8_t> public_key);
PublicKeyFile ReadPublicKeyFile(const Params& params,
                                std::span<const std::uint8_t> bytes);

struct PrivateKeyFile {
  KeyLength l1;
  KemPrivateKey key;
};
std::vector<std::uint8_t> WritePrivateKeyFile(const Params& params, KeyLength l1,
                                              const KemPrivateKey& key);
PrivateKeyFile ReadPrivateKeyFile(const Params& params,
                                  std::span<const std::uint8_t> bytes);

struct CiphertextFile {
  KeyLength l1;
  std::vector<std::uint8_t> ciphertext;
};
std::vector<std::uint8_t> WriteCiphertextFile(const Params& params, KeyLength l1,
                                              std::span<const std::uint8_t> ciphertext);
CiphertextFile ReadCiphertextFile(const Params& params,
                                  std::span<const std::uint8_t> bytes);

// Whole-file I/O. Throw Error on I/O failure.
std::vector<std::uint8_t> ReadBinaryFile(const std::filesystem::path& path);
void WriteBinaryFile(const std::filesystem::path& path,
                     std::span<const std::uint8_t> bytes);

}  // namespace sdgr

#endif  // SDGR_FILE_FORMAT_H_
