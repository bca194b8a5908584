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


// The sdgr command-line front end, callable in-process for tests.

#ifndef SDGR_TOOLS_CLI_H_
#define SDGR_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sdgr::cli {

// Exit codes beyond 0 (success) and 1 (usage or other failure).
inline constexpr int kExitCorruptFile = 2;
inline constexpr int kExitParameterMismatch = 3;
inline constexpr int kExitGuard = 4;

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace sdgr::cli

#endif  // SDGR_TOOLS_CLI_H_
