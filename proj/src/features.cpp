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

#include "asmsim/features.hpp"

#include <stdexcept>

namespace asmsim {

MnemonicSet existence_set(const AssemblyProgram& program) {
  MnemonicSet set;
  for (const auto& insn : program.instructions) set.insert(insn.mnemonic);
  return set;
}

FrequencyVector frequency_vector(const AssemblyProgram& program) {
  FrequencyVector counts;
  for (const auto& insn : program.instructions) ++counts[insn.mnemonic];
  return counts;
}

PatternSet extract_ngrams(std::span<const BasicBlock> blocks, std::size_t n) {
  if (n < 2) throw std::invalid_argument("n-gram length must be at least 2");
  PatternSet set{n, {}};
  for (const auto& block : blocks) {
    const auto& insns = block.instructions;
    for (std::size_t i = 0; i + n <= insns.size(); ++i) {
      NGramPattern pattern;
      pattern.mnemonics.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        pattern.mnemonics.push_back(insns[i + k].mnemonic);
      }
      set.patterns.insert(std::move(pattern));
    }
  }
  return set;
}

PatternUniverse build_universe(std::span<const PatternSet> sets) {
  PatternUniverse universe;
  if (sets.empty()) return universe;
  universe.n = sets.front().n;
  std::set<NGramPattern> all;
  for (const auto& set : sets) {
    if (set.n != universe.n) {
      throw Error(ErrorCode::kMixedPatternLength, "universe",
                  "pattern sets with n=" + std::to_string(universe.n) +
                      " and n=" + std::to_string(set.n));
    }
    all.insert(set.patterns.begin(), set.patterns.end());
  }
  universe.ordered.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < universe.ordered.size(); ++i) {
    universe.index.emplace(universe.ordered[i], i);
  }
  return universe;
}

ProgramFeatures compute_features(const AssemblyProgram& program,
                                 const ParserConfig& config, NgramMode mode) {
  std::vector<BasicBlock> blocks = mode == NgramMode::kBlocks
                                       ? segment_basic_blocks(program, config)
                                       : linear_blocks(program);
  ProgramFeatures f;
  f.existence = existence_set(program);
  f.frequency = frequency_vector(program);
  f.patterns2 = extract_ngrams(blocks, 2);
  f.patterns3 = extract_ngrams(blocks, 3);
  return f;
}

nlohmann::ordered_json features_to_json(const ProgramFeatures& features) {
  auto patterns = [](const PatternSet& set) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : set.patterns) arr.push_back(p.mnemonics);
    return arr;
  };
  nlohmann::ordered_json j;
  j["mnemonics"] = features.existence;
  nlohmann::ordered_json freq = nlohmann::ordered_json::object();
  for (const auto& [m, k] : features.frequency) freq[m] = k;
  j["freq"] = std::move(freq);
  j["ngrams2"] = patterns(features.patterns2);
  j["ngrams3"] = patterns(features.patterns3);
  return j;
}

}  // namespace asmsim
