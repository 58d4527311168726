// Copyright 2026 The cuelearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Kept separate from main() so tests can drive it.

#ifndef CUELEARN_TOOLS_CLI_H_
#define CUELEARN_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace cuelearn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInfeasible = 3;

// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cuelearn::cli

#endif  // CUELEARN_TOOLS_CLI_H_
