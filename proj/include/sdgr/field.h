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

// Arithmetic in F_p and in the quadratic extension F_{q^2} = F_p[t]/(t^2 - l)
// where l is the smallest quadratic non-residue mod p. Only q = p (m = 1) is
// supported.

#ifndef SDGR_FIELD_H_
#define SDGR_FIELD_H_

#include <cstdint>

#include "sdgr/op_counts.h"

namespace sdgr {

class Rng;

// c0 + c1*t with both coefficients in [0, p).
struct Fq2 {
  std::uint32_t c0 = 0;
  std::uint32_t c1 = 0;

  bool IsZero() const { return c0 == 0 && c1 == 0; }
  friend bool operator==(const Fq2&, const Fq2&) = default;
};

bool IsPrime(std::uint64_t v);

// Smallest l >= 2 with l^((p-1)/2) == -1 mod p. Throws DomainError unless p
// is an odd prime.
std::uint32_t FindLambda(std::uint32_t p);

// Largest prime accepted; keeps every F_p product inside 64 bits.
inline constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

class Field {
 public:
  // Throws DomainError for composite p, p < 3, p > kMaxPrime or m != 1.
  static Field Create(std::uint32_t p, std::uint32_t m = 1);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t lambda() const { return lambda_; }
  std::uint64_t q() const { return p_; }
  // ceil(log2 p): width of one coefficient on the wire.
  int coefficient_bits() const { return coefficient_bits_; }

  Fq2 Zero() const { return {}; }
  Fq2 One() const { return {1, 0}; }
  // Reduces both inputs mod p.
  Fq2 Element(std::uint64_t c0, std::uint64_t c1) const;
  bool Contains(const Fq2& a) const { return a.c0 < p_ && a.c1 < p_; }

  std::uint32_t AddFp(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t SubFp(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t MulFp(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t PowFp(std::uint32_t a, std::uint64_t e) const;

  Fq2 Add(const Fq2& a, const Fq2& b) const;
  Fq2 Sub(const Fq2& a, const Fq2& b) const;
  Fq2 Neg(const Fq2& a) const;
  // (a0 + a1 t)(b0 + b1 t) = (a0 b0 + l a1 b1) + (a0 b1 + a1 b0) t
  Fq2 Mul(const Fq2& a, const Fq2& b) const;
  // (c0 - c1 t) / (c0^2 - l c1^2). Throws DomainError on zero.
  Fq2 Inv(const Fq2& a) const;
  Fq2 Pow(const Fq2& a, std::uint64_t e, OpCounts* counts = nullptr) const;

  // sigma(a) = a^q. For m = 1 this is conjugation t -> -t.
  Fq2 Frobenius(const Fq2& a) const { return {a.c0, a.c1 == 0 ? 0 : p_ - a.c1}; }
  // a^q by left-to-right square-and-multiply over the bits of q, starting
  // from r = 1. Every F_{q^2} multiplication is recorded in counts.
  Fq2 FrobeniusLadder(const Fq2& a, OpCounts* counts = nullptr) const;
  // Number of F_{q^2} multiplications FrobeniusLadder spends (the model's f).
  std::uint64_t FrobeniusLadderCost() const;

  // Uniform over all p^2 elements.
  Fq2 Sample(Rng& rng) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.lambda_ == b.lambda_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t m, std::uint32_t lambda);

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t lambda_;
  int coefficient_bits_;
};

}  // namespace sdgr

#endif  // SDGR_FIELD_H_
