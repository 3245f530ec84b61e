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

#include "asmsim/asm_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "asmsim/error.hpp"

namespace asmsim {
namespace {

constexpr std::array<std::string_view, 17> kConditionCodes = {
    "eq", "ne", "cs", "hs", "cc", "lo", "mi", "pl", "vs",
    "vc", "hi", "ls", "ge", "lt", "gt", "le", "al"};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\f' || c == '\v' || c == '\r' ||
         c == '\n';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_condition_code(std::string_view s) {
  return std::find(kConditionCodes.begin(), kConditionCodes.end(), s) !=
         kConditionCodes.end();
}

bool is_symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '$';
}

bool is_valid_label(std::string_view name) {
  if (name.empty()) return false;
  if (std::all_of(name.begin(), name.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    return true;
  }
  if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), is_symbol_char);
}

bool is_valid_mnemonic(std::string_view m) {
  if (m.empty() || !std::islower(static_cast<unsigned char>(m.front()))) {
    return false;
  }
  return std::all_of(m.begin(), m.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '.' || c == '_';
  });
}

// Cuts the line at the first comment marker outside a double-quoted string.
std::string_view strip_comment(std::string_view line,
                               const std::set<std::string>& markers) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
      continue;
    }
    for (const auto& marker : markers) {
      if (!marker.empty() && line.substr(i).starts_with(marker)) {
        return line.substr(0, i);
      }
    }
  }
  return line;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n' || text[i] == '\r') {
      lines.push_back(text.substr(start, i - start));
      if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      start = i + 1;
    }
  }
  if (start < text.size()) lines.push_back(text.substr(start));
  return lines;
}

// Longest entry of `entries` that `mnemonic` equals or extends with a
// condition code; empty if none.
std::string_view match_entry(std::string_view mnemonic,
                             const std::set<std::string>& entries) {
  std::string_view best;
  for (const auto& entry : entries) {
    if (entry.size() <= best.size() || !mnemonic.starts_with(entry)) continue;
    std::string_view suffix = mnemonic.substr(entry.size());
    if (suffix.empty() || is_condition_code(suffix)) best = entry;
  }
  return best;
}

bool operands_name_pc(std::string_view operands) {
  std::size_t i = 0;
  while (i < operands.size()) {
    if (!is_symbol_char(operands[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < operands.size() && is_symbol_char(operands[j])) ++j;
    if (to_lower(operands.substr(i, j - i)) == "pc") return true;
    i = j;
  }
  return false;
}

class LineClassifier {
 public:
  LineClassifier(const ParserConfig& config, AssemblyProgram& program,
                 std::string_view source)
      : config_(config), program_(program), source_(source) {}

  void run(std::string_view text) {
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      classify_line(lines[i], static_cast<int>(i + 1));
    }
  }

 private:
  void classify_line(std::string_view raw, int line_no) {
    std::string_view body =
        trim(strip_comment(raw, config_.comment_markers));
    if (body.empty()) return;  // blank or comment-only

    // Any number of label definitions may precede a directive or an
    // instruction on the same line.
    while (!body.empty()) {
      std::size_t end = 0;
      while (end < body.size() && !is_space(body[end])) ++end;
      std::string_view token = body.substr(0, end);
      if (token.size() > 1 && token.back() == ':') {
        std::string_view name = token.substr(0, token.size() - 1);
        if (!is_valid_label(name)) {
          reject(line_no, "invalid label name '" + std::string(name) + "'");
          return;
        }
        define_label(name, line_no);
        body = trim(body.substr(end));
        continue;
      }
      if (body.front() == '.') return;  // directive
      add_instruction(token, trim(body.substr(end)), line_no);
      return;
    }
  }

  void define_label(std::string_view name, int line_no) {
    auto [it, inserted] = program_.labels.emplace(
        std::string(name), program_.instructions.size());
    if (!inserted) {
      program_.diagnostics.push_back(
          {line_no, "duplicate label '" + std::string(name) +
                        "' ignored; first definition kept"});
    }
  }

  void add_instruction(std::string_view token, std::string_view operands,
                       int line_no) {
    std::string mnemonic = normalize_mnemonic(token);
    if (!is_valid_mnemonic(mnemonic)) {
      reject(line_no, "unrecognized statement '" + std::string(token) + "'");
      return;
    }
    program_.instructions.push_back(
        {std::move(mnemonic), std::string(operands), line_no});
  }

  void reject(int line_no, const std::string& message) {
    if (config_.strict) {
      std::string where = source_.empty() ? std::string("line")
                                          : std::string(source_) + ":";
      if (source_.empty()) where += ' ';
      throw Error(ErrorCode::kParse, where + std::to_string(line_no), message);
    }
    program_.diagnostics.push_back({line_no, message});
  }

  const ParserConfig& config_;
  AssemblyProgram& program_;
  std::string_view source_;
};

}  // namespace

void ParserConfig::validate() const {
  if (branch_mnemonics.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "parser.branch_mnemonics",
                "must not be empty");
  }
  for (const auto& m : indirect_branch_mnemonics) {
    if (!branch_mnemonics.contains(m)) {
      throw Error(ErrorCode::kInvalidConfig, "parser.indirect_branch_mnemonics",
                  "'" + m + "' is not a branch mnemonic");
    }
  }
}

std::string normalize_mnemonic(std::string_view token) {
  std::string m = to_lower(token);
  if (m.size() > 2 && (m.ends_with(".n") || m.ends_with(".w"))) {
    m.resize(m.size() - 2);
  }
  return m;
}

AssemblyProgram parse_assembly(std::string_view text,
                               const ParserConfig& config,
                               std::string_view source) {
  config.validate();
  AssemblyProgram program;
  LineClassifier(config, program, source).run(text);
  return program;
}

bool is_branch(const Instruction& insn, const ParserConfig& config) {
  if (!match_entry(insn.mnemonic, config.branch_mnemonics).empty()) {
    return true;
  }
  static const std::set<std::string> kPop{"pop"};
  return config.pc_pops_are_branches &&
         !match_entry(insn.mnemonic, kPop).empty() &&
         operands_name_pc(insn.operands_raw);
}

std::vector<std::string> branch_targets(const Instruction& insn,
                                        const AssemblyProgram& program,
                                        const ParserConfig& config) {
  std::string_view entry = match_entry(insn.mnemonic, config.branch_mnemonics);
  if (entry.empty() ||
      config.indirect_branch_mnemonics.contains(std::string(entry))) {
    return {};
  }
  std::vector<std::string> targets;
  std::string_view ops = insn.operands_raw;
  std::size_t i = 0;
  while (i < ops.size()) {
    if (!is_symbol_char(ops[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < ops.size() && is_symbol_char(ops[j])) ++j;
    std::string token(ops.substr(i, j - i));
    if (program.labels.contains(token)) targets.push_back(std::move(token));
    i = j;
  }
  return targets;
}

std::vector<BasicBlock> segment_basic_blocks(const AssemblyProgram& program,
                                             const ParserConfig& config) {
  const std::size_t n = program.size();
  if (n == 0) return {};

  std::vector<bool> leader(n, false);
  leader[0] = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Instruction& insn = program.instructions[i];
    if (!is_branch(insn, config)) continue;
    if (i + 1 < n) leader[i + 1] = true;
    for (const auto& target : branch_targets(insn, program, config)) {
      std::size_t index = program.labels.at(target);
      if (index < n) leader[index] = true;
    }
  }

  std::vector<BasicBlock> blocks;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || leader[i]) {
      BasicBlock block;
      block.start_index = start;
      block.end_index = i;
      block.instructions.assign(program.instructions.begin() + start,
                                program.instructions.begin() + i);
      blocks.push_back(std::move(block));
      start = i;
    }
  }
  return blocks;
}

std::vector<BasicBlock> linear_blocks(const AssemblyProgram& program) {
  if (program.empty()) return {};
  return {BasicBlock{program.instructions, 0, program.size()}};
}

std::string canonical_text(const AssemblyProgram& program) {
  std::vector<std::vector<std::string>> labels_at(program.size() + 1);
  for (const auto& [name, index] : program.labels) {
    labels_at[index].push_back(name);
  }
  std::string out;
  for (std::size_t i = 0; i <= program.size(); ++i) {
    for (const auto& name : labels_at[i]) out += name + ":\n";
    if (i == program.size()) break;
    const Instruction& insn = program.instructions[i];
    out += '\t';
    out += insn.mnemonic;
    if (!insn.operands_raw.empty()) {
      out += ' ';
      out += insn.operands_raw;
    }
    out += '\n';
  }
  return out;
}

}  // namespace asmsim
