// Copyright 2026 The pmpspec Authors.
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

#ifndef PMP_CLI_H_
#define PMP_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pmp {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

// Runs one subcommand. `args` excludes the program name. Graph input is read
// from --input or, failing that, from `in`. Reports and error objects go to
// `out`; `err` receives help text only.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace pmp

#endif  // PMP_CLI_H_
