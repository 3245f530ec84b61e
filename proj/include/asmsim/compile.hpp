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

// Cross-compiles C sources of a corpus to assembly through an external
// compiler, with a content-addressed output cache.

#ifndef ASMSIM_COMPILE_HPP
#define ASMSIM_COMPILE_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "asmsim/corpus.hpp"

namespace asmsim {

struct CompileOptions {
  std::string compiler;
  std::string command_template;
  std::vector<std::string> flags;
  std::filesystem::path cache_dir;
  unsigned jobs = 1;
};

struct CompileOutcome {
  ProgramEntry entry;
  std::optional<std::filesystem::path> assembly;  // set on success
  bool cache_hit = false;
  std::string error;
};

struct CompileSummary {
  std::vector<CompileOutcome> outcomes;  // manifest order
  nlohmann::ordered_json compiler;       // command, flags, version

  std::size_t failures() const;
};

// PATH lookup for bare names; existence + execute permission for paths.
std::optional<std::filesystem::path> find_executable(std::string_view name);

// POSIX single-quote escaping.
std::string shell_quote(std::string_view s);

// Substitutes {cc}, {flags}, {input} and {output}; every substituted value is
// shell-quoted.
std::string expand_command(std::string_view command_template,
                           std::string_view compiler,
                           std::span<const std::string> flags,
                           const std::filesystem::path& input,
                           const std::filesystem::path& output);

// Hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

// Throws Error(kCompilerMissing) when the compiler cannot be found. Per-file
// failures are recorded in the summary and do not stop the run.
CompileSummary compile_corpus(std::span<const ProgramEntry> entries,
                              const CompileOptions& options);

// A manifest listing the successfully compiled programs, with paths relative
// to `manifest_dir` and the compiler description under metadata.compiler.
nlohmann::ordered_json derived_manifest(const CompileSummary& summary,
                                        const std::filesystem::path& manifest_dir);

}  // namespace asmsim

#endif  // ASMSIM_COMPILE_HPP
