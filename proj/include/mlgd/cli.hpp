// Copyright 2026 The mlg-design Authors
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

#ifndef MLGD_CLI_HPP_
#define MLGD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mlgd {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitLimitExceeded = 3;

// Runs the tool on `args` (without the program name), writing reports to
// `out` and diagnostics to `err`. Returns the exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace mlgd

#endif  // MLGD_CLI_HPP_
