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

#ifndef SUBASPECT_ERRORS_H_
#define SUBASPECT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace subaspect {

// Input violates a documented contract (empty document, duplicate id,
// sentence-count mismatch, unknown algorithm). The CLI maps it to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bytes on disk could not be read or parsed (missing file, malformed JSON,
// truncated embedding file). The CLI maps it to exit code 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subaspect

#endif  // SUBASPECT_ERRORS_H_
