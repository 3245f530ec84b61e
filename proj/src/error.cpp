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

#include "asmsim/error.hpp"

namespace asmsim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kEmptyProgram: return "empty_program";
    case ErrorCode::kEmptyInput: return "empty_input";
    case ErrorCode::kNonPositive: return "non_positive";
    case ErrorCode::kDuplicateId: return "duplicate_id";
    case ErrorCode::kMissingField: return "missing_field";
    case ErrorCode::kIncompleteGrid: return "incomplete_grid";
    case ErrorCode::kInvalidStride: return "invalid_stride";
    case ErrorCode::kInvalidCorpus: return "invalid_corpus";
    case ErrorCode::kInvalidConfig: return "invalid_config";
    case ErrorCode::kMixedPatternLength: return "mixed_pattern_length";
    case ErrorCode::kPatternNotInUniverse: return "pattern_not_in_universe";
    case ErrorCode::kCompilerMissing: return "compiler_missing";
    case ErrorCode::kCompileFailed: return "compile_failed";
  }
  return "unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return 2;
    case ErrorCode::kEmptyProgram:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kNonPositive:
      return 3;
    case ErrorCode::kCompilerMissing:
    case ErrorCode::kCompileFailed:
      return 4;
    case ErrorCode::kParse:
    case ErrorCode::kDuplicateId:
    case ErrorCode::kMissingField:
    case ErrorCode::kIncompleteGrid:
    case ErrorCode::kInvalidStride:
    case ErrorCode::kInvalidCorpus:
      return 5;
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kMixedPatternLength:
    case ErrorCode::kPatternNotInUniverse:
      return 1;
  }
  return 1;
}

Error::Error(ErrorCode code, std::string entity, const std::string& message)
    : std::runtime_error(entity.empty() ? message : entity + ": " + message),
      code_(code),
      entity_(std::move(entity)),
      message_(message) {}

std::string Error::diagnostic_line() const {
  std::string line = "error\t";
  line += error_code_name(code_);
  line += '\t';
  line += entity_.empty() ? "-" : entity_;
  line += '\t';
  for (char c : message_) line += (c == '\n' || c == '\t') ? ' ' : c;
  return line;
}

}  // namespace asmsim
