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

#include "sdgr/dihedral.h"

#include <string>

#include "sdgr/errors.h"

namespace sdgr {

DihedralGroup::DihedralGroup(std::uint32_t n) : n_(n) {
  if (n == 0) throw DomainError("dihedral group needs n >= 1");
  if (n > (1u << 15)) throw DomainError("dihedral group n too large");
  auto table = std::make_shared<std::vector<GroupIndex>>(
      static_cast<std::size_t>(order()) * order());
  for (GroupIndex k1 = 0; k1 < order(); ++k1) {
    for (GroupIndex k2 = 0; k2 < order(); ++k2) {
      (*table)[static_cast<std::size_t>(k1) * order() + k2] =
          MulClosedForm(k1, k2);
    }
  }
  table_ = std::move(table);
}

void DihedralGroup::CheckIndex(GroupIndex k) const {
  if (k >= order()) {
    throw DomainError("group index " + std::to_string(k) +
                      " out of range [0, " + std::to_string(order()) + ")");
  }
}

GroupIndex DihedralGroup::MulClosedForm(GroupIndex k1, GroupIndex k2) const {
  CheckIndex(k1);
  CheckIndex(k2);
  const std::uint32_t i = k1 % n_;
  const std::uint32_t j = k2 % n_;
  const bool refl1 = k1 >= n_;
  const bool refl2 = k2 >= n_;
  // x^i x^j = x^[i+j]; x^i y x^j = x^[i-j] y;
  // x^i x^j y = x^[i+j] y; x^i y x^j y = x^[i-j].
  const std::uint32_t e = refl1 ? (i + n_ - j) % n_ : (i + j) % n_;
  return (refl1 != refl2) ? n_ + e : e;
}

GroupIndex DihedralGroup::Mul(GroupIndex k1, GroupIndex k2) const {
  CheckIndex(k1);
  CheckIndex(k2);
  return (*table_)[static_cast<std::size_t>(k1) * order() + k2];
}

GroupIndex DihedralGroup::Inverse(GroupIndex k) const {
  CheckIndex(k);
  if (k == 0) return 0;
  if (k < n_) return n_ - k;
  return k;
}

Automorphism DihedralGroup::Theta(GroupIndex k) const {
  CheckIndex(k);
  return k >= n_ ? Automorphism::kSigma : Automorphism::kIdentity;
}

}  // namespace sdgr
