// Copyright 2026 The ckp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CKP_CLI_HPP_
#define CKP_CLI_HPP_

#include <ostream>

namespace ckp {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInvalidInstance = 3,
  kExitSolverFailure = 4,
};

/// Entry point behind the `ckp` executable:
///   generate | solve | separate | bench
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ckp

#endif  // CKP_CLI_HPP_
