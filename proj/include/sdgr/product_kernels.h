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

// Kernels behind SkewRing::Product.
//
// kReference is the table-driven double loop over group elements and is the
// only instrumented kernel. The other two rewrite the product as four cyclic
// convolutions (one per pair of cosets) and accumulate unreduced 64-bit sums,
// reducing once at the end. They differ only in the row kernel:
//
//   acc0[k] += s0 * w0[k] + (l * s1 mod p) * w1[k]
//   acc1[k] += s0 * w1[k] + s1 * w0[k]          for k in [0, len)
//
// kPortable runs it in plain C++, kAvx2 four lanes at a time.

#ifndef SDGR_PRODUCT_KERNELS_H_
#define SDGR_PRODUCT_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace sdgr {

enum class ProductKernel : std::uint8_t { kReference, kPortable, kAvx2 };

std::string_view KernelName(ProductKernel kernel);
std::optional<ProductKernel> ParseKernelName(std::string_view name);

bool CpuSupportsAvx2();

// Whether the lazy-accumulation kernels are exact for these parameters:
// 4n(p-1)^2 must fit in a uint64 accumulator.
bool LazyAccumulationFits(std::uint32_t p, std::uint32_t n);

// Fastest kernel usable on this CPU for (p, n). The environment variable
// SDGR_PRODUCT_KERNEL (reference|portable|avx2) overrides the choice when the
// named kernel is usable.
ProductKernel SelectProductKernel(std::uint32_t p, std::uint32_t n);

// Whether the kernel can run here for (p, n).
bool KernelUsable(ProductKernel kernel, std::uint32_t p, std::uint32_t n);

namespace internal {

using RowKernel = void (*)(std::uint64_t* acc0, std::uint64_t* acc1,
                           const std::uint32_t* w0, const std::uint32_t* w1,
                           std::uint32_t s0, std::uint32_t s1,
                           std::uint32_t lambda_s1, std::size_t len);

void AccumulateRowPortable(std::uint64_t* acc0, std::uint64_t* acc1,
                           const std::uint32_t* w0, const std::uint32_t* w1,
                           std::uint32_t s0, std::uint32_t s1,
                           std::uint32_t lambda_s1, std::size_t len);

// Requires CpuSupportsAvx2().
void AccumulateRowAvx2(std::uint64_t* acc0, std::uint64_t* acc1,
                       const std::uint32_t* w0, const std::uint32_t* w1,
                       std::uint32_t s0, std::uint32_t s1,
                       std::uint32_t lambda_s1, std::size_t len);

// nullptr for kReference.
RowKernel RowKernelFor(ProductKernel kernel);

}  // namespace internal
}  // namespace sdgr

#endif  // SDGR_PRODUCT_KERNELS_H_
