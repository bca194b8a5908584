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

#include "sdgr/skew_ring.h"

#include <algorithm>
#include <string>

#include "sdgr/errors.h"
#include "sdgr/rng.h"

namespace sdgr {

bool RingElement::IsZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Fq2& c) { return c.IsZero(); });
}

std::string_view SubspaceName(Subspace s) {
  switch (s) {
    case Subspace::kZero:
      return "zero";
    case Subspace::kCnOnly:
      return "Cn";
    case Subspace::kCnYOnly:
      return "Cny";
    case Subspace::kMixed:
      return "mixed";
  }
  return "unknown";
}

SkewRing::SkewRing(Field field, std::uint32_t n)
    : SkewRing(field, n, SelectProductKernel(field.p(), n)) {}

SkewRing::SkewRing(Field field, std::uint32_t n, ProductKernel kernel)
    : field_(field), group_(n), kernel_(kernel) {
  if (!KernelUsable(kernel, field.p(), n)) {
    throw DomainError("product kernel '" + std::string(KernelName(kernel)) +
                      "' is not usable here");
  }
}

RingElement SkewRing::Basis(GroupIndex k, const Fq2& coeff) const {
  if (k >= dimension()) throw DomainError("basis index out of range");
  RingElement e = Zero();
  e[k] = coeff;
  return e;
}

RingElement SkewRing::FromCoefficients(std::vector<Fq2> coeffs) const {
  if (coeffs.size() != dimension()) {
    throw DomainError("ring element needs " + std::to_string(dimension()) +
                      " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (const Fq2& c : coeffs) {
    if (!field_.Contains(c)) throw DomainError("coefficient not reduced mod p");
  }
  return RingElement(std::move(coeffs));
}

void SkewRing::CheckElement(const RingElement& a) const {
  if (a.size() != dimension()) {
    throw ParameterMismatch("ring element has " + std::to_string(a.size()) +
                            " coefficients, ring dimension is " +
                            std::to_string(dimension()));
  }
}

RingElement SkewRing::Add(const RingElement& a, const RingElement& b,
                          OpCounts* counts) const {
  CheckElement(a);
  CheckElement(b);
  RingElement c = Zero();
  for (std::size_t i = 0; i < dimension(); ++i) c[i] = field_.Add(a[i], b[i]);
  if (counts != nullptr) counts->field_adds += dimension();
  return c;
}

RingElement SkewRing::Sub(const RingElement& a, const RingElement& b) const {
  CheckElement(a);
  CheckElement(b);
  RingElement c = Zero();
  for (std::size_t i = 0; i < dimension(); ++i) c[i] = field_.Sub(a[i], b[i]);
  return c;
}

RingElement SkewRing::Neg(const RingElement& a) const {
  return Sub(Zero(), a);
}

RingElement SkewRing::Scale(const Fq2& s, const RingElement& a) const {
  CheckElement(a);
  RingElement c = Zero();
  for (std::size_t i = 0; i < dimension(); ++i) c[i] = field_.Mul(s, a[i]);
  return c;
}

RingElement SkewRing::Product(const RingElement& a,
                              const RingElement& b) const {
  return ProductWith(kernel_, a, b);
}

RingElement SkewRing::ProductWith(ProductKernel kernel, const RingElement& a,
                                  const RingElement& b) const {
  if (!KernelUsable(kernel, field_.p(), n())) {
    throw DomainError("product kernel '" + std::string(KernelName(kernel)) +
                      "' is not usable here");
  }
  if (kernel == ProductKernel::kReference) return ProductReference(a, b);
  return ProductConvolution(internal::RowKernelFor(kernel), a, b);
}

RingElement SkewRing::ProductReference(const RingElement& a,
                                       const RingElement& b,
                                       OpCounts* counts) const {
  CheckElement(a);
  CheckElement(b);
  const auto order = static_cast<GroupIndex>(dimension());
  RingElement c = Zero();
  for (GroupIndex i = 0; i < order; ++i) {
    const auto row = group_.Row(i);
    for (GroupIndex j = 0; j < order; ++j) {
      const Fq2 fe = field_.Mul(a[i], ApplyTheta(i, b[j]));
      c[row[j]] = field_.Add(c[row[j]], fe);
    }
  }
  if (counts != nullptr) {
    const std::uint64_t pairs = std::uint64_t{order} * order;
    counts->field_adds += pairs;
    counts->field_muls += pairs;
    counts->homomorphism_applications += pairs;
    counts->sigma_applications += pairs / 2;
  }
  return c;
}

RingElement SkewRing::ProductConvolution(internal::RowKernel row,
                                         const RingElement& a,
                                         const RingElement& b) const {
  CheckElement(a);
  CheckElement(b);
  const std::size_t len = n();
  const std::uint32_t p = field_.p();

  // Each window is the period-n sequence written out twice, so that
  // w[(k - i) mod n] for k in [0, n) is the contiguous slice at n - i.
  //   lo:  b[t]            rotations of b's C_n part
  //   hi:  b[n + t]        rotations of b's C_n y part
  //   rlo: sigma(b[-t])    reversed and conjugated C_n part
  //   rhi: sigma(b[n - t]) reversed and conjugated C_n y part
  std::vector<std::uint32_t> lo0(2 * len), lo1(2 * len), hi0(2 * len),
      hi1(2 * len), rlo0(2 * len), rlo1(2 * len), rhi0(2 * len), rhi1(2 * len);
  for (std::size_t t = 0; t < 2 * len; ++t) {
    const std::size_t s = t % len;
    const std::size_t r = (len - s) % len;
    lo0[t] = b[s].c0;
    lo1[t] = b[s].c1;
    hi0[t] = b[len + s].c0;
    hi1[t] = b[len + s].c1;
    const Fq2 sl = field_.Frobenius(b[r]);
    const Fq2 sh = field_.Frobenius(b[len + r]);
    rlo0[t] = sl.c0;
    rlo1[t] = sl.c1;
    rhi0[t] = sh.c0;
    rhi1[t] = sh.c1;
  }

  std::vector<std::uint64_t> acc_lo0(len), acc_lo1(len), acc_hi0(len),
      acc_hi1(len);
  const std::uint32_t lambda = field_.lambda();
  for (std::size_t i = 0; i < len; ++i) {
    // x^i * x^j = x^(i+j), x^i * x^j y = x^(i+j) y
    const Fq2 s = a[i];
    if (!s.IsZero()) {
      const std::uint32_t ls1 = field_.MulFp(lambda, s.c1);
      const std::size_t off = len - i;
      row(acc_lo0.data(), acc_lo1.data(), lo0.data() + off, lo1.data() + off,
          s.c0, s.c1, ls1, len);
      row(acc_hi0.data(), acc_hi1.data(), hi0.data() + off, hi1.data() + off,
          s.c0, s.c1, ls1, len);
    }
    // x^i y * x^j = x^(i-j) y, x^i y * x^j y = x^(i-j), coefficient twisted
    const Fq2 r = a[len + i];
    if (!r.IsZero()) {
      const std::uint32_t ls1 = field_.MulFp(lambda, r.c1);
      const std::size_t off = len - i;
      row(acc_hi0.data(), acc_hi1.data(), rlo0.data() + off, rlo1.data() + off,
          r.c0, r.c1, ls1, len);
      row(acc_lo0.data(), acc_lo1.data(), rhi0.data() + off, rhi1.data() + off,
          r.c0, r.c1, ls1, len);
    }
  }

  RingElement c = Zero();
  for (std::size_t k = 0; k < len; ++k) {
    c[k] = {static_cast<std::uint32_t>(acc_lo0[k] % p),
            static_cast<std::uint32_t>(acc_lo1[k] % p)};
    c[len + k] = {static_cast<std::uint32_t>(acc_hi0[k] % p),
                  static_cast<std::uint32_t>(acc_hi1[k] % p)};
  }
  return c;
}

RingElement SkewRing::Adjunct(const RingElement& a, OpCounts* counts) const {
  CheckElement(a);
  RingElement c = Zero();
  for (GroupIndex i = 0; i < dimension(); ++i) {
    const GroupIndex j = group_.Inverse(i);
    c[j] = ApplyTheta(j, a[i]);
  }
  if (counts != nullptr) {
    counts->homomorphism_applications += dimension();
    counts->sigma_applications += n();
  }
  return c;
}

Subspace SkewRing::Classify(const RingElement& a) const {
  CheckElement(a);
  bool lo = false;
  bool hi = false;
  for (std::size_t i = 0; i < n(); ++i) {
    lo = lo || !a[i].IsZero();
    hi = hi || !a[n() + i].IsZero();
  }
  if (lo && hi) return Subspace::kMixed;
  if (lo) return Subspace::kCnOnly;
  if (hi) return Subspace::kCnYOnly;
  return Subspace::kZero;
}

bool SkewRing::IsReversible(const RingElement& a) const {
  if (a.size() != dimension()) return false;
  for (std::size_t i = 0; i < n(); ++i) {
    if (!a[i].IsZero()) return false;
  }
  for (std::size_t i = 1; i < n(); ++i) {
    if (a[n() + i] != a[n() + (n() - i)]) return false;
  }
  return true;
}

RingElement SkewRing::Phi(const RingElement& a) const {
  const Subspace s = Classify(a);
  if (s != Subspace::kCnYOnly && s != Subspace::kZero) {
    throw DomainError("Phi is defined on C_n y only, got " +
                      std::string(SubspaceName(s)));
  }
  RingElement c = Zero();
  for (std::size_t i = 0; i < n(); ++i) c[i] = a[n() + i];
  return c;
}

RingElement SkewRing::SampleRing(Rng& rng) const {
  RingElement c = Zero();
  for (std::size_t i = 0; i < dimension(); ++i) c[i] = field_.Sample(rng);
  return c;
}

RingElement SkewRing::SampleCn(Rng& rng) const {
  RingElement c = Zero();
  for (std::size_t i = 0; i < n(); ++i) c[i] = field_.Sample(rng);
  return c;
}

RingElement SkewRing::SampleCnY(Rng& rng) const {
  RingElement c = Zero();
  for (std::size_t i = n(); i < dimension(); ++i) c[i] = field_.Sample(rng);
  return c;
}

RingElement SkewRing::GammaFromFree(std::span<const Fq2> free) const {
  if (free.size() != GammaFreeCount(n())) {
    throw DomainError("Gamma needs " + std::to_string(GammaFreeCount(n())) +
                      " free coordinates");
  }
  RingElement c = Zero();
  c[n()] = free[0];
  for (std::size_t i = 1; i <= n() / 2; ++i) {
    c[n() + i] = free[i];
    c[n() + (n() - i) % n()] = free[i];
  }
  return c;
}

RingElement SkewRing::SampleGamma(Rng& rng) const {
  std::vector<Fq2> free(GammaFreeCount(n()));
  for (Fq2& f : free) f = field_.Sample(rng);
  return GammaFromFree(free);
}

RingElement SkewRing::GenPublicElement(Rng& rng,
                                       std::uint64_t* rejections) const {
  for (;;) {
    RingElement h = SampleRing(rng);
    if (Classify(h) == Subspace::kMixed) return h;
    if (rejections != nullptr) ++*rejections;
  }
}

ReversibleElement::ReversibleElement(const SkewRing& ring, RingElement element)
    : element_(std::move(element)) {
  if (!ring.IsReversible(element_)) {
    throw DomainError("element is not in the theta-reversible subspace");
  }
}

}  // namespace sdgr
