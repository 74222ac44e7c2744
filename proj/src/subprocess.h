// Copyright 2026 The jstyle Authors.
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

#ifndef JSTYLE_SRC_SUBPROCESS_H_
#define JSTYLE_SRC_SUBPROCESS_H_

#include <string>
#include <vector>

namespace jstyle::internal {

struct ProcessResult {
  int exitCode = -1;  // -1 when the program could not be started
  std::string out;
  std::string err;
};

// Runs argv[0] (looked up on PATH) without a shell and captures both streams.
ProcessResult RunProcess(const std::vector<std::string>& argv);

}  // namespace jstyle::internal

#endif  // JSTYLE_SRC_SUBPROCESS_H_
