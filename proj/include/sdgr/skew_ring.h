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

// The skew dihedral group ring F_{q^2}^theta D_2n.
//
// An element is a dense vector of 2n coefficients; coeffs[i] (i < n) belongs
// to x^i and coeffs[n + i] to x^i y. Multiplication is twisted by theta:
//
//   (a_g g)(b_h h) = a_g theta(g)(b_h) gh
//
// with theta(x^i) = id and theta(x^i y) = sigma (Frobenius). The ring
// decomposes as F C_n (+) F C_n y; Gamma is the subspace of F C_n y whose
// coefficients satisfy a_i = a_{n-i}.

#ifndef SDGR_SKEW_RING_H_
#define SDGR_SKEW_RING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "sdgr/dihedral.h"
#include "sdgr/field.h"
#include "sdgr/op_counts.h"
#include "sdgr/product_kernels.h"

namespace sdgr {

class Rng;

class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(std::size_t size) : coeffs_(size) {}
  explicit RingElement(std::vector<Fq2> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const { return coeffs_.size(); }
  const Fq2& operator[](std::size_t i) const { return coeffs_[i]; }
  Fq2& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const Fq2> coeffs() const { return coeffs_; }

  bool IsZero() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::vector<Fq2> coeffs_;
};

enum class Subspace : std::uint8_t { kZero, kCnOnly, kCnYOnly, kMixed };

std::string_view SubspaceName(Subspace s);

class SkewRing {
 public:
  // Throws DomainError if the kernel cannot run for these parameters.
  SkewRing(Field field, std::uint32_t n);
  SkewRing(Field field, std::uint32_t n, ProductKernel kernel);

  const Field& field() const { return field_; }
  const DihedralGroup& group() const { return group_; }
  std::uint32_t n() const { return group_.n(); }
  std::size_t dimension() const { return group_.order(); }
  ProductKernel kernel() const { return kernel_; }

  RingElement Zero() const { return RingElement(dimension()); }
  RingElement One() const { return Basis(0); }
  RingElement Basis(GroupIndex k) const { return Basis(k, field_.One()); }
  RingElement Basis(GroupIndex k, const Fq2& coeff) const;
  // Throws DomainError if the size or any coefficient is out of range.
  RingElement FromCoefficients(std::vector<Fq2> coeffs) const;

  // Throws ParameterMismatch on length mismatch.
  void CheckElement(const RingElement& a) const;

  RingElement Add(const RingElement& a, const RingElement& b,
                  OpCounts* counts = nullptr) const;
  RingElement Sub(const RingElement& a, const RingElement& b) const;
  RingElement Neg(const RingElement& a) const;
  RingElement Scale(const Fq2& s, const RingElement& a) const;

  // Skew product through the kernel picked at construction.
  RingElement Product(const RingElement& a, const RingElement& b) const;
  RingElement ProductWith(ProductKernel kernel, const RingElement& a,
                          const RingElement& b) const;
  // c[table[i][j]] += a[i] * theta(i)(b[j]) over all (i, j).
  RingElement ProductReference(const RingElement& a, const RingElement& b,
                               OpCounts* counts = nullptr) const;

  // a^ = sum theta(g^-1)(a_g) g^-1, an anti-automorphism: (ab)^ = b^ a^.
  RingElement Adjunct(const RingElement& a, OpCounts* counts = nullptr) const;

  Subspace Classify(const RingElement& a) const;
  bool IsReversible(const RingElement& a) const;
  // Moves the x^i y coefficient to x^i. Throws DomainError if a has support
  // in C_n.
  RingElement Phi(const RingElement& a) const;

  RingElement SampleRing(Rng& rng) const;
  RingElement SampleCn(Rng& rng) const;
  RingElement SampleCnY(Rng& rng) const;
  // Uniform over Gamma: coordinate n and n+1..n+floor(n/2) are free, the rest
  // mirror them. ceil((n+1)/2) free field elements.
  RingElement SampleGamma(Rng& rng) const;
  static std::uint32_t GammaFreeCount(std::uint32_t n) { return 1 + n / 2; }
  // Writes free coordinates into an otherwise zero element of Gamma.
  RingElement GammaFromFree(std::span<const Fq2> free) const;

  // h = h1 + h2 with h1 in C_n and h2 in C_n y both non-zero; whole-ring
  // samples are rejected until both halves are non-zero. The number of
  // rejected draws is added to *rejections when given.
  RingElement GenPublicElement(Rng& rng, std::uint64_t* rejections = nullptr) const;

  friend bool operator==(const SkewRing& a, const SkewRing& b) {
    return a.field_ == b.field_ && a.n() == b.n();
  }

 private:
  Fq2 ApplyTheta(GroupIndex g, const Fq2& v) const {
    return g >= n() ? field_.Frobenius(v) : v;
  }
  RingElement ProductConvolution(internal::RowKernel row, const RingElement& a,
                                 const RingElement& b) const;

  Field field_;
  DihedralGroup group_;
  ProductKernel kernel_;
};

// Element of Gamma. Construction validates membership.
class ReversibleElement {
 public:
  // Throws DomainError unless `element` lies in Gamma.
  ReversibleElement(const SkewRing& ring, RingElement element);

  const RingElement& element() const { return element_; }
  bool IsZero() const { return element_.IsZero(); }

  friend bool operator==(const ReversibleElement&,
                         const ReversibleElement&) = default;

 private:
  RingElement element_;
};

}  // namespace sdgr

#endif  // SDGR_SKEW_RING_H_
