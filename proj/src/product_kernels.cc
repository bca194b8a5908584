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

#include "sdgr/product_kernels.h"

#include <cstdlib>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SDGR_HAVE_X86 1
#endif

namespace sdgr {

std::string_view KernelName(ProductKernel kernel) {
  switch (kernel) {
    case ProductKernel::kReference:
      return "reference";
    case ProductKernel::kPortable:
      return "portable";
    case ProductKernel::kAvx2:
      return "avx2";
  }
  return "unknown";
}

std::optional<ProductKernel> ParseKernelName(std::string_view name) {
  for (auto k : {ProductKernel::kReference, ProductKernel::kPortable,
                 ProductKernel::kAvx2}) {
    if (KernelName(k) == name) return k;
  }
  return std::nullopt;
}

bool CpuSupportsAvx2() {
#ifdef SDGR_HAVE_X86
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported;
#else
  return false;
#endif
}

bool LazyAccumulationFits(std::uint32_t p, std::uint32_t n) {
  const unsigned __int128 bound = static_cast<unsigned __int128>(4) * n *
                                  (p - 1) * static_cast<unsigned __int128>(p - 1);
  return bound <= static_cast<unsigned __int128>(~std::uint64_t{0});
}

bool KernelUsable(ProductKernel kernel, std::uint32_t p, std::uint32_t n) {
  switch (kernel) {
    case ProductKernel::kReference:
      return true;
    case ProductKernel::kPortable:
      return LazyAccumulationFits(p, n);
    case ProductKernel::kAvx2:
      return CpuSupportsAvx2() && LazyAccumulationFits(p, n);
  }
  return false;
}

ProductKernel SelectProductKernel(std::uint32_t p, std::uint32_t n) {
  if (const char* env = std::getenv("SDGR_PRODUCT_KERNEL")) {
    if (auto forced = ParseKernelName(env); forced && KernelUsable(*forced, p, n)) {
      return *forced;
    }
  }
  if (KernelUsable(ProductKernel::kAvx2, p, n)) return ProductKernel::kAvx2;
  if (KernelUsable(ProductKernel::kPortable, p, n)) return ProductKernel::kPortable;
  return ProductKernel::kReference;
}

namespace internal {

void AccumulateRowPortable(std::uint64_t* acc0, std::uint64_t* acc1,
                           const std::uint32_t* w0, const std::uint32_t* w1,
                           std::uint32_t s0, std::uint32_t s1,
                           std::uint32_t lambda_s1, std::size_t len) {
  const std::uint64_t a = s0, b = s1, lb = lambda_s1;
  for (std::size_t k = 0; k < len; ++k) {
    acc0[k] += a * w0[k] + lb * w1[k];
    acc1[k] += a * w1[k] + b * w0[k];
  }
}

#ifdef SDGR_HAVE_X86

__attribute__((target("avx2"))) void AccumulateRowAvx2(
    std::uint64_t* acc0, std::uint64_t* acc1, const std::uint32_t* w0,
    const std::uint32_t* w1, std::uint32_t s0, std::uint32_t s1,
    std::uint32_t lambda_s1, std::size_t len) {
  // _mm256_mul_epu32 multiplies the low 32 bits of each 64-bit lane.
  const __m256i vs0 = _mm256_set1_epi64x(s0);
  const __m256i vs1 = _mm256_set1_epi64x(s1);
  const __m256i vls1 = _mm256_set1_epi64x(lambda_s1);
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    const __m256i x0 = _mm256_cvtepu32_epi64(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(w0 + k)));
    const __m256i x1 = _mm256_cvtepu32_epi64(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(w1 + k)));
    __m256i r0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc0 + k));
    __m256i r1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc1 + k));
    r0 = _mm256_add_epi64(r0, _mm256_add_epi64(_mm256_mul_epu32(vs0, x0),
                                               _mm256_mul_epu32(vls1, x1)));
    r1 = _mm256_add_epi64(r1, _mm256_add_epi64(_mm256_mul_epu32(vs0, x1),
                                               _mm256_mul_epu32(vs1, x0)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc0 + k), r0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc1 + k), r1);
  }
  AccumulateRowPortable(acc0 + k, acc1 + k, w0 + k, w1 + k, s0, s1, lambda_s1,
                        len - k);
}

#else

void AccumulateRowAvx2(std::uint64_t* acc0, std::uint64_t* acc1,
                       const std::uint32_t* w0, const std::uint32_t* w1,
                       std::uint32_t s0, std::uint32_t s1,
                       std::uint32_t lambda_s1, std::size_t len) {
  AccumulateRowPortable(acc0, acc1, w0, w1, s0, s1, lambda_s1, len);
}

#endif

RowKernel RowKernelFor(ProductKernel kernel) {
  switch (kernel) {
    case ProductKernel::kReference:
      return nullptr;
    case ProductKernel::kPortable:
      return &AccumulateRowPortable;
    case ProductKernel::kAvx2:
      return &AccumulateRowAvx2;
  }
  return nullptr;
}

}  // namespace internal
}  // namespace sdgr
