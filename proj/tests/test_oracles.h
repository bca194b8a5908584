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


// Independent reference computations for tests. Nothing here calls the
// library's group table, product kernels or Frobenius; group elements are
// handled as (rotation, reflection) pairs and multiplied from the relation
// y x = x^-1 y.

#ifndef SDGR_TESTS_TEST_ORACLES_H_
#define SDGR_TESTS_TEST_ORACLES_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "sdgr/field.h"
#include "sdgr/skew_ring.h"

namespace sdgr::testing {

struct NaiveFq2 {
  std::uint64_t p;
  std::uint64_t lambda;

  Fq2 Add(Fq2 a, Fq2 b) const {
    return {static_cast<std::uint32_t>((a.c0 + b.c0) % p),
            static_cast<std::uint32_t>((a.c1 + b.c1) % p)};
  }
  Fq2 Mul(Fq2 a, Fq2 b) const {
    const std::uint64_t c0 =
        (std::uint64_t{a.c0} * b.c0 % p + lambda * (std::uint64_t{a.c1} * b.c1 % p)) % p;
    const std::uint64_t c1 =
        (std::uint64_t{a.c0} * b.c1 + std::uint64_t{a.c1} * b.c0) % p;
    return {static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1)};
  }
  // a^p by right-to-left binary exponentiation.
  Fq2 Frobenius(Fq2 a) const {
    Fq2 r{1, 0};
    for (std::uint64_t e = p; e != 0; e >>= 1) {
      if (e & 1) r = Mul(r, a);
      a = Mul(a, a);
    }
    return r;
  }
};

struct NaiveDihedral {
  std::uint32_t n;

  // x^i y^j, j in {0, 1}.
  std::pair<std::uint32_t, std::uint32_t> Decode(std::uint32_t k) const {
    return {k % n, k / n};
  }
  std::uint32_t Encode(std::uint32_t i, std::uint32_t j) const { return j * n + i; }

  // (x^i y^j)(x^k y^l) = x^(i + (-1)^j k) y^(j + l).
  std::uint32_t Mul(std::uint32_t a, std::uint32_t b) const {
    const auto [i, j] = Decode(a);
    const auto [k, l] = Decode(b);
    const std::uint32_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
    return Encode(rot, (j + l) % 2);
  }
  std::uint32_t Inverse(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < 2 * n; ++b) {
      if (Mul(a, b) == 0) return b;
    }
    return ~0u;
  }
  bool IsReflection(std::uint32_t k) const { return Decode(k).second == 1; }
};

// Def. of the skew product as a triple loop over target, left and right
// group elements.
inline RingElement NaiveProduct(const NaiveFq2& f, const NaiveDihedral& g,
                                const RingElement& a, const RingElement& b) {
  const std::uint32_t order = 2 * g.n;
  RingElement c(order);
  for (std::uint32_t target = 0; target < order; ++target) {
    for (std::uint32_t u = 0; u < order; ++u) {
      for (std::uint32_t v = 0; v < order; ++v) {
        if (g.Mul(u, v) != target) continue;
        const Fq2 twisted = g.IsReflection(u) ? f.Frobenius(b[v]) : b[v];
        c[target] = f.Add(c[target], f.Mul(a[u], twisted));
      }
    }
  }
  return c;
}

inline RingElement NaiveAdjunct(const NaiveFq2& f, const NaiveDihedral& g,
                                const RingElement& a) {
  RingElement c(2 * g.n);
  for (std::uint32_t u = 0; u < 2 * g.n; ++u) {
    const std::uint32_t inv = g.Inverse(u);
    c[inv] = g.IsReflection(inv) ? f.Frobenius(a[u]) : a[u];
  }
  return c;
}

inline NaiveFq2 OracleField(const SkewRing& ring) {
  return {ring.field().p(), ring.field().lambda()};
}

inline NaiveDihedral OracleGroup(const SkewRing& ring) { return {ring.n()}; }

// Smallest quadratic non-residue by brute force over squares.
inline std::uint32_t NaiveLambda(std::uint32_t p) {
  std::vector<bool> square(p, false);
  for (std::uint64_t x = 1; x < p; ++x) square[x * x % p] = true;
  for (std::uint32_t l = 2; l < p; ++l) {
    if (!square[l]) return l;
  }
  return 0;
}

}  // namespace sdgr::testing

#endif  // SDGR_TESTS_TEST_ORACLES_H_
