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

#ifndef SUBASPECT_FILEIO_H_
#define SUBASPECT_FILEIO_H_

#include <string>
#include <string_view>

namespace subaspect {

// Whole-file read; FormatError naming the path on failure.
std::string ReadFile(const std::string& path);

// Writes to a sibling temporary file and renames it into place, so a failed
// run never leaves a partial artifact. Creates parent directories.
void WriteFileAtomic(const std::string& path, std::string_view contents);

}  // namespace subaspect

#endif  // SUBASPECT_FILEIO_H_
