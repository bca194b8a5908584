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

#ifndef SDGR_OP_COUNTS_H_
#define SDGR_OP_COUNTS_H_

#include <cstdint>

namespace sdgr {

// Instrumentation filled in by the reference kernels. Counts are in
// F_{q^2} operations.
struct OpCounts {
  std::uint64_t field_adds = 0;
  std::uint64_t field_muls = 0;
  // Calls of theta(g)(.) for any g, identity included.
  std::uint64_t homomorphism_applications = 0;
  // Subset of the above where theta(g) = sigma.
  std::uint64_t sigma_applications = 0;

  // Multiplications under the uniform cost model: every homomorphism
  // application is charged f multiplications.
  std::uint64_t ModelledMuls(std::uint64_t f) const {
    return field_muls + f * homomorphism_applications;
  }
};

}  // namespace sdgr

#endif  // SDGR_OP_COUNTS_H_
