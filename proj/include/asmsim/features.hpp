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

// Per-program feature families: mnemonic existence sets, mnemonic frequency
// vectors and n-gram pattern sets, plus the dense Eigen views the metrics
// operate on.

#ifndef ASMSIM_FEATURES_HPP
#define ASMSIM_FEATURES_HPP

#include <Eigen/Core>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "asmsim/asm_parser.hpp"
#include "asmsim/error.hpp"

namespace asmsim {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MnemonicSet = std::set<std::string>;
using FrequencyVector = std::map<std::string, std::uint64_t>;

// An ordered tuple of consecutive mnemonics taken from one basic block.
struct NGramPattern {
  std::vector<std::string> mnemonics;

  std::size_t size() const { return mnemonics.size(); }
  friend auto operator<=>(const NGramPattern&, const NGramPattern&) = default;
  friend bool operator==(const NGramPattern&, const NGramPattern&) = default;
};

struct PatternSet {
  std::size_t n = 2;
  std::set<NGramPattern> patterns;

  std::size_t size() const { return patterns.size(); }
  bool contains(const NGramPattern& p) const { return patterns.contains(p); }
  friend bool operator==(const PatternSet&, const PatternSet&) = default;
};

// Sorted union of the patterns of a dataset; the coordinate system of the
// boolean pattern vectors.
struct PatternUniverse {
  std::size_t n = 2;
  std::vector<NGramPattern> ordered;
  std::map<NGramPattern, std::size_t> index;

  std::size_t size() const { return ordered.size(); }
};

struct ProgramFeatures {
  MnemonicSet existence;
  FrequencyVector frequency;
  PatternSet patterns2{2, {}};
  PatternSet patterns3{3, {}};

  const PatternSet& patterns(std::size_t n) const {
    return n == 2 ? patterns2 : patterns3;
  }
};

MnemonicSet existence_set(const AssemblyProgram& program);
FrequencyVector frequency_vector(const AssemblyProgram& program);

// All length-n windows inside each block, de-duplicated. Windows never span
// two blocks. Requires n >= 2.
PatternSet extract_ngrams(std::span<const BasicBlock> blocks, std::size_t n);

// Throws Error(kMixedPatternLength) if the sets disagree on n. An empty input
// gives an empty universe with n = 2.
PatternUniverse build_universe(std::span<const PatternSet> sets);

enum class NgramMode { kBlocks, kLinear };

ProgramFeatures compute_features(const AssemblyProgram& program,
                                 const ParserConfig& config = {},
                                 NgramMode mode = NgramMode::kBlocks);

// {"mnemonics": [...], "freq": {...}, "ngrams2": [[...]], "ngrams3": [[...]]}
nlohmann::ordered_json features_to_json(const ProgramFeatures& features);

// 0/1 presence coefficients of `set` over the coordinates of `universe`.
template <typename Scalar = double>
VectorX<Scalar> to_boolean_vector(const PatternSet& set,
                                  const PatternUniverse& universe) {
  if (set.n != universe.n && !set.patterns.empty()) {
    throw Error(ErrorCode::kMixedPatternLength, "pattern set",
                "set has n=" + std::to_string(set.n) + ", universe has n=" +
                    std::to_string(universe.n));
  }
  VectorX<Scalar> v = VectorX<Scalar>::Zero(
      static_cast<Eigen::Index>(universe.size()));
  for (const auto& p : set.patterns) {
    auto it = universe.index.find(p);
    if (it == universe.index.end()) {
      throw Error(ErrorCode::kPatternNotInUniverse, "pattern set",
                  "pattern of length " + std::to_string(p.size()) +
                      " is not in the universe");
    }
    v(static_cast<Eigen::Index>(it->second)) = Scalar(1);
  }
  return v;
}

// Reads the set back from a boolean vector.
template <typename Derived>
PatternSet from_boolean_vector(const Eigen::MatrixBase<Derived>& v,
                               const PatternUniverse& universe) {
  PatternSet set{universe.n, {}};
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) set.patterns.insert(universe.ordered[static_cast<std::size_t>(i)]);
  }
  return set;
}

// The two frequency vectors laid out densely over the sorted union of their
// mnemonics.
template <typename Scalar = double>
std::pair<VectorX<Scalar>, VectorX<Scalar>> align_frequencies(
    const FrequencyVector& a, const FrequencyVector& b) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      rows.emplace_back(ia->second, 0);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      rows.emplace_back(0, ib->second);
      ++ib;
    } else {
      rows.emplace_back(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  VectorX<Scalar> va(static_cast<Eigen::Index>(rows.size()));
  VectorX<Scalar> vb(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    va(static_cast<Eigen::Index>(i)) = static_cast<Scalar>(rows[i].first);
    vb(static_cast<Eigen::Index>(i)) = static_cast<Scalar>(rows[i].second);
  }
  return {std::move(va), std::move(vb)};
}

}  // namespace asmsim

#endif  // ASMSIM_FEATURES_HPP
