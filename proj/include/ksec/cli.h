// Copyright 2026 The Authors.
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

#ifndef KSEC_CLI_H_
#define KSEC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ksec {

// Process exit codes of the ksec tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCounterexample = 3;
inline constexpr int kExitInvariant = 4;

// Runs the ksec command line. args excludes the program name. Results go to
// `out`, the resolved config and diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ksec

#endif  // KSEC_CLI_H_
