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

// Parsing of GNU-syntax (ARM Thumb) assembly listings into an instruction
// stream, and leader-based basic block segmentation of that stream.

#ifndef ASMSIM_ASM_PARSER_HPP
#define ASMSIM_ASM_PARSER_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace asmsim {

struct Instruction {
  std::string mnemonic;      // lowercase, width qualifier stripped
  std::string operands_raw;  // verbatim remainder of the line
  int line_no = 0;           // 1-based

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct Diagnostic {
  int line_no = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct AssemblyProgram {
  std::vector<Instruction> instructions;
  // Label name -> index of the instruction that follows the definition.
  // A label at end of input maps to instructions.size().
  std::map<std::string, std::size_t> labels;
  std::vector<Diagnostic> diagnostics;

  bool empty() const { return instructions.empty(); }
  std::size_t size() const { return instructions.size(); }
};

struct BasicBlock {
  std::vector<Instruction> instructions;
  std::size_t start_index = 0;  // inclusive
  std::size_t end_index = 0;    // exclusive

  std::size_t size() const { return instructions.size(); }
};

struct ParserConfig {
  std::set<std::string> comment_markers{"@", "//"};
  // Control-transfer mnemonics. A mnemonic is branch-class if it equals an
  // entry or is an entry followed by an ARM condition code.
  std::set<std::string> branch_mnemonics{"b", "bl", "blx", "bx", "cbz", "cbnz"};
  // Branch-class mnemonics whose operands are never scanned for targets.
  std::set<std::string> indirect_branch_mnemonics{"blx", "bx"};
  // `pop {.., pc}` ends a block.
  bool pc_pops_are_branches = true;
  bool strict = false;

  // Throws Error(kInvalidConfig) if an invariant does not hold.
  void validate() const;
};

// Throws Error(kParse) on the first unclassifiable line when config.strict is
// set; otherwise such lines are skipped and recorded in diagnostics.
// `source` prefixes the line number in error positions ("file.s:12").
AssemblyProgram parse_assembly(std::string_view text,
                               const ParserConfig& config = {},
                               std::string_view source = {});

// Lowercases and strips a trailing `.n` / `.w`.
std::string normalize_mnemonic(std::string_view token);

bool is_branch(const Instruction& insn, const ParserConfig& config = {});

// Label names a direct branch may transfer to. Empty for indirect branches
// and for non-branches.
std::vector<std::string> branch_targets(const Instruction& insn,
                                        const AssemblyProgram& program,
                                        const ParserConfig& config = {});

std::vector<BasicBlock> segment_basic_blocks(const AssemblyProgram& program,
                                             const ParserConfig& config = {});

// The whole program as one block (or none, if empty). Used when n-gram
// windows are allowed to cross control flow.
std::vector<BasicBlock> linear_blocks(const AssemblyProgram& program);

// Labels and instructions only, one per line, in source order.
std::string canonical_text(const AssemblyProgram& program);

}  // namespace asmsim

#endif  // ASMSIM_ASM_PARSER_HPP
