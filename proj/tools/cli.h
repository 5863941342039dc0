// Copyright 2026 The Subaspect Authors.
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

#ifndef SUBASPECT_TOOLS_CLI_H_
#define SUBASPECT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace subaspect {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitFormat = 2;

// Entry point for the `subaspect` tool. args excludes the program name.
// Returns 0 on success, 1 on validation errors (including bad usage) and 2 on
// I/O or format errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace subaspect

#endif  // SUBASPECT_TOOLS_CLI_H_
