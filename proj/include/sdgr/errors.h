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

#ifndef SDGR_ERRORS_H_
#define SDGR_ERRORS_H_

#include <stdexcept>

namespace sdgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates the precondition of an operation (out-of-range index,
// element outside the required subspace, non-prime modulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two operands were built over different parameter sets.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the candidate space exceeds the guard.
class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

// File is truncated, has a bad magic/version or fails its checksum.
class CorruptFile : public Error {
 public:
  using Error::Error;
};

}  // namespace sdgr

#endif  // SDGR_ERRORS_H_
