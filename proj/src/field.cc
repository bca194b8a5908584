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

#include "sdgr/field.h"

#include <bit>
#include <string>

#include "sdgr/errors.h"
#include "sdgr/rng.h"

namespace sdgr {

bool IsPrime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t PowMod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::uint32_t FindLambda(std::uint32_t p) {
  if (p < 3 || !IsPrime(p)) {
    throw DomainError("FindLambda: p must be an odd prime, got " +
                      std::to_string(p));
  }
  for (std::uint32_t l = 2; l < p; ++l) {
    if (PowMod(l, (p - 1) / 2, p) == p - 1) return l;
  }
  // Half of F_p^* are non-residues, so the scan always succeeds.
  throw Error("FindLambda: no quadratic non-residue found");
}

Field::Field(std::uint32_t p, std::uint32_t m, std::uint32_t lambda)
    : p_(p),
      m_(m),
      lambda_(lambda),
      coefficient_bits_(std::bit_width(p - 1)) {}

Field Field::Create(std::uint32_t p, std::uint32_t m) {
  if (m != 1) {
    throw DomainError("only m = 1 is supported, got m = " + std::to_string(m));
  }
  if (p > kMaxPrime) {
    throw DomainError("p exceeds the supported 31-bit range");
  }
  return Field(p, m, FindLambda(p));
}

Fq2 Field::Element(std::uint64_t c0, std::uint64_t c1) const {
  return {static_cast<std::uint32_t>(c0 % p_),
          static_cast<std::uint32_t>(c1 % p_)};
}

std::uint32_t Field::AddFp(std::uint32_t a, std::uint32_t b) const {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t Field::SubFp(std::uint32_t a, std::uint32_t b) const {
  return a >= b ? a - b : a + (p_ - b);
}

std::uint32_t Field::MulFp(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
}

std::uint32_t Field::PowFp(std::uint32_t a, std::uint64_t e) const {
  return PowMod(a, e, p_);
}

Fq2 Field::Add(const Fq2& a, const Fq2& b) const {
  return {AddFp(a.c0, b.c0), AddFp(a.c1, b.c1)};
}

Fq2 Field::Sub(const Fq2& a, const Fq2& b) const {
  return {SubFp(a.c0, b.c0), SubFp(a.c1, b.c1)};
}

Fq2 Field::Neg(const Fq2& a) const { return Sub(Zero(), a); }

Fq2 Field::Mul(const Fq2& a, const Fq2& b) const {
  const std::uint64_t p = p_;
  const std::uint64_t lb1 = std::uint64_t{lambda_} * b.c1 % p;
  const std::uint64_t c0 = (std::uint64_t{a.c0} * b.c0 % p + a.c1 * lb1 % p) % p;
  const std::uint64_t c1 =
      (std::uint64_t{a.c0} * b.c1 % p + std::uint64_t{a.c1} * b.c0 % p) % p;
  return {static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1)};
}

Fq2 Field::Inv(const Fq2& a) const {
  if (a.IsZero()) throw DomainError("Fq2 inverse of zero");
  // Norm is non-zero because t^2 - l is irreducible.
  const std::uint32_t norm =
      SubFp(MulFp(a.c0, a.c0), MulFp(lambda_, MulFp(a.c1, a.c1)));
  const std::uint32_t inv_norm = PowFp(norm, p_ - 2);
  return {MulFp(a.c0, inv_norm), MulFp(SubFp(0, a.c1), inv_norm)};
}

Fq2 Field::Pow(const Fq2& a, std::uint64_t e, OpCounts* counts) const {
  Fq2 r = One();
  for (int bit = std::bit_width(e) - 1; bit >= 0; --bit) {
    r = Mul(r, r);
    if (counts != nullptr) ++counts->field_muls;
    if ((e >> bit) & 1) {
      r = Mul(r, a);
      if (counts != nullptr) ++counts->field_muls;
    }
  }
  return r;
}

Fq2 Field::FrobeniusLadder(const Fq2& a, OpCounts* counts) const {
  return Pow(a, q(), counts);
}

std::uint64_t Field::FrobeniusLadderCost() const {
  return static_cast<std::uint64_t>(std::bit_width(q())) +
         static_cast<std::uint64_t>(std::popcount(q()));
}

Fq2 Field::Sample(Rng& rng) const {
  const std::uint32_t c0 = rng.UniformBelow(p_);
  return {c0, rng.UniformBelow(p_)};
}

}  // namespace sdgr
