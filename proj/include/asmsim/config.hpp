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

#ifndef ASMSIM_CONFIG_HPP
#define ASMSIM_CONFIG_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asmsim/asm_parser.hpp"
#include "asmsim/features.hpp"
#include "asmsim/report.hpp"

namespace asmsim {

inline constexpr const char* kCompilerEnvVar = "ASMSIM_CC";

struct ToolConfig {
  // Executable substituted for {cc} in compiler_command.
  std::string compiler = "arm-none-eabi-gcc";
  // Placeholders: {cc} {flags} {input} {output}.
  std::string compiler_command = "{cc} {flags} -S {input} -o {output}";
  std::vector<std::string> compiler_flags{"-mthumb", "-O0"};
  std::optional<std::filesystem::path> cache_dir;
  ParserConfig parser;
  std::optional<std::vector<std::size_t>> strides;
  OutputFormat output_format = OutputFormat::kMarkdown;
  NgramMode ngram_mode = NgramMode::kBlocks;
  unsigned jobs = 1;

  void validate() const;
};

// Overlays the keys present in `doc` onto `config`. Unknown keys and
// ill-typed values raise Error(kInvalidConfig).
void apply_config_json(const nlohmann::json& doc, ToolConfig& config);

// Defaults, then the compiler environment variable (if set), then the file
// (if given). Command-line flags are applied on top by the caller.
ToolConfig load_tool_config(const std::optional<std::filesystem::path>& file);

// "1,2,3" -> {1, 2, 3}. Throws Error(kInvalidConfig) on anything else.
std::vector<std::size_t> parse_stride_list(std::string_view text);

}  // namespace asmsim

#endif  // ASMSIM_CONFIG_HPP
