// Copyright 2026 The asmsim Authors. All Rights Reserved.
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

#ifndef ASMSIM_ERROR_HPP
#define ASMSIM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace asmsim {

enum class ErrorCode {
  kIo,
  kParse,
  kEmptyProgram,
  kEmptyInput,
  kNonPositive,
  kDuplicateId,
  kMissingField,
  kIncompleteGrid,
  kInvalidStride,
  kInvalidCorpus,
  kInvalidConfig,
  kMixedPatternLength,
  kPatternNotInUniverse,
  kCompilerMissing,
  kCompileFailed,
};

// Stable snake_case name used in diagnostics.
std::string_view error_code_name(ErrorCode code);

// Process exit status for a failure of this kind:
// 2 I/O, 3 degenerate input, 4 external tool, 5 invalid corpus, 1 otherwise.
int exit_code_for(ErrorCode code);

// Every failure in the library is reported through this type. `entity` names
// the thing at fault (a file:line, a manifest entry, a grid cell, a pair).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string entity, const std::string& message);

  ErrorCode code() const { return code_; }
  const std::string& entity() const { return entity_; }
  const std::string& message() const { return message_; }

  // One tab-separated line: "error\t<code>\t<entity>\t<message>".
  std::string diagnostic_line() const;

 private:
  ErrorCode code_;
  std::string entity_;
  std::string message_;
};

}  // namespace asmsim

#endif  // ASMSIM_ERROR_HPP
