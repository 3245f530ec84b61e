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

#include "asmsim/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>

#include "asmsim/error.hpp"

namespace asmsim {
namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& message) {
  throw Error(ErrorCode::kInvalidConfig, key, message);
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) bad(key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> as_string_list(const json& v, const std::string& key) {
  if (!v.is_array()) bad(key, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : v) out.push_back(as_string(item, key));
  return out;
}

std::set<std::string> as_string_set(const json& v, const std::string& key) {
  auto list = as_string_list(v, key);
  return {list.begin(), list.end()};
}

bool as_bool(const json& v, const std::string& key) {
  if (!v.is_boolean()) bad(key, "expected true or false");
  return v.get<bool>();
}

void apply_parser(const json& doc, ParserConfig& parser) {
  if (!doc.is_object()) bad("parser", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    const std::string where = "parser." + key;
    if (key == "comment_markers") {
      parser.comment_markers = as_string_set(value, where);
    } else if (key == "branch_mnemonics") {
      parser.branch_mnemonics = as_string_set(value, where);
    } else if (key == "indirect_branch_mnemonics") {
      parser.indirect_branch_mnemonics = as_string_set(value, where);
    } else if (key == "pc_pops_are_branches") {
      parser.pc_pops_are_branches = as_bool(value, where);
    } else if (key == "strict") {
      parser.strict = as_bool(value, where);
    } else {
      bad(where, "unknown key");
    }
  }
}

}  // namespace

void ToolConfig::validate() const {
  if (jobs < 1) bad("jobs", "must be at least 1");
  parser.validate();
  if (strides && strides->empty()) bad("strides", "must not be empty");
}

void apply_config_json(const json& doc, ToolConfig& config) {
  if (!doc.is_object()) bad("config", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "compiler") {
      config.compiler = as_string(value, key);
    } else if (key == "compiler_command") {
      config.compiler_command = as_string(value, key);
    } else if (key == "compiler_flags") {
      config.compiler_flags = as_string_list(value, key);
    } else if (key == "cache_dir") {
      config.cache_dir = as_string(value, key);
    } else if (key == "parser") {
      apply_parser(value, config.parser);
    } else if (key == "strides") {
      if (!value.is_array()) bad(key, "expected an array of integers");
      std::vector<std::size_t> strides;
      for (const auto& s : value) {
        if (!s.is_number_unsigned()) bad(key, "expected positive integers");
        strides.push_back(s.get<std::size_t>());
      }
      config.strides = std::move(strides);
    } else if (key == "output_format") {
      auto f = parse_output_format(as_string(value, key));
      if (!f) bad(key, "expected json, csv or markdown");
      config.output_format = *f;
    } else if (key == "ngram_mode") {
      std::string mode = as_string(value, key);
      if (mode == "blocks") {
        config.ngram_mode = NgramMode::kBlocks;
      } else if (mode == "linear") {
        config.ngram_mode = NgramMode::kLinear;
      } else {
        bad(key, "expected blocks or linear");
      }
    } else if (key == "jobs") {
      if (!value.is_number_unsigned() || value.get<unsigned>() < 1) {
        bad(key, "expected an integer >= 1");
      }
      config.jobs = value.get<unsigned>();
    } else {
      bad(key, "unknown key");
    }
  }
}

ToolConfig load_tool_config(const std::optional<std::filesystem::path>& file) {
  ToolConfig config;
  if (const char* cc = std::getenv(kCompilerEnvVar); cc && *cc) {
    config.compiler = cc;
  }
  if (file) {
    std::ifstream in(*file);
    if (!in) throw Error(ErrorCode::kIo, file->string(), "cannot open config");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kInvalidConfig,
                  file->string() + ":byte " + std::to_string(e.byte),
                  "malformed JSON");
    }
    apply_config_json(doc, config);
  }
  return config;
}

std::vector<std::size_t> parse_stride_list(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || value == 0) {
      bad("strides", "expected a comma-separated list of positive integers");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) bad("strides", "trailing comma");
  }
  if (out.empty()) bad("strides", "empty list");
  return out;
}

}  // namespace asmsim
