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

#ifndef SDGR_DIHEDRAL_H_
#define SDGR_DIHEDRAL_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace sdgr {

// x^i y^j is encoded as j*n + i, so [0, n) are rotations and [n, 2n)
// reflections.
using GroupIndex = std::uint32_t;

enum class Automorphism : std::uint8_t { kIdentity, kSigma };

// sigma has order 2, so composition is XOR of the tags.
constexpr Automorphism Compose(Automorphism a, Automorphism b) {
  return a == b ? Automorphism::kIdentity : Automorphism::kSigma;
}

// D_2n = <x, y : x^n = y^2 = 1, y x y^-1 = x^-1> with an eagerly built
// Cayley table. Copies share the table.
class DihedralGroup {
 public:
  // Throws DomainError for n == 0.
  explicit DihedralGroup(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  std::uint32_t order() const { return 2 * n_; }

  static GroupIndex Encode(std::uint32_t i, std::uint32_t j, std::uint32_t n) {
    return j * n + i;
  }

  // table[k1][k2]. Throws DomainError on out-of-range indices.
  GroupIndex Mul(GroupIndex k1, GroupIndex k2) const;
  // Same product from the four closed-form cases, without the table.
  GroupIndex MulClosedForm(GroupIndex k1, GroupIndex k2) const;
  GroupIndex Inverse(GroupIndex k) const;
  // theta_sigma: sigma on reflections x^i y, identity on rotations.
  Automorphism Theta(GroupIndex k) const;

  // Row k of the table (products k * 0 .. k * (2n-1)); unchecked.
  std::span<const GroupIndex> Row(GroupIndex k) const {
    return {table_->data() + static_cast<std::size_t>(k) * order(), order()};
  }

 private:
  void CheckIndex(GroupIndex k) const;

  std::uint32_t n_;
  std::shared_ptr<const std::vector<GroupIndex>> table_;
};

}  // namespace sdgr

#endif  // SDGR_DIHEDRAL_H_
