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

// The programmer x application corpus grid, its three grouping schemes, and
// the averaging / normalization arithmetic of a grouping study.

#ifndef ASMSIM_CORPUS_HPP
#define ASMSIM_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "asmsim/asm_parser.hpp"
#include "asmsim/features.hpp"
#include "asmsim/metrics.hpp"

namespace asmsim {

struct ProgramEntry {
  std::string id;
  std::filesystem::path path;
  std::string programmer;
  std::string application;

  friend bool operator==(const ProgramEntry&, const ProgramEntry&) = default;
};

// Parses {"programs": [{"id", "path", "programmer", "application"}, ...]}.
// Relative paths are resolved against `base_dir` and must be readable.
// `source` names the document in error messages.
std::vector<ProgramEntry> load_manifest(std::string_view bytes,
                                        const std::filesystem::path& base_dir,
                                        std::string_view source = "manifest");
std::vector<ProgramEntry> load_manifest_file(const std::filesystem::path& path);

struct Dataset {
  std::string name;
  std::vector<ProgramEntry> entries;
  nlohmann::ordered_json metadata;  // null unless the manifest carries one
};

// Accepts either a single-dataset manifest or
// {"datasets": [{"name", "manifest": path} | {"name", "programs": [...]}]}.
std::vector<Dataset> load_study_manifest(const std::filesystem::path& path);

class CorpusGrid {
 public:
  CorpusGrid(std::vector<std::string> applications,
             std::vector<std::string> programmers,
             std::vector<ProgramEntry> cells);

  const std::vector<std::string>& applications() const { return applications_; }
  const std::vector<std::string>& programmers() const { return programmers_; }
  std::size_t application_count() const { return applications_.size(); }
  std::size_t programmer_count() const { return programmers_.size(); }
  bool square() const { return applications_.size() == programmers_.size(); }

  const ProgramEntry& cell(std::size_t application, std::size_t programmer) const {
    return cells_[application * programmers_.size() + programmer];
  }
  const std::vector<ProgramEntry>& entries() const { return cells_; }

 private:
  std::vector<std::string> applications_;
  std::vector<std::string> programmers_;
  std::vector<ProgramEntry> cells_;  // row-major by application
};

// Label order is first appearance. Throws Error(kIncompleteGrid) listing every
// missing or doubly-filled (application, programmer) cell, and
// Error(kInvalidCorpus) when fewer than two programmers or applications.
CorpusGrid build_grid(std::span<const ProgramEntry> entries);

enum class GroupingKind { kApplicationSpecific, kProgrammerSpecific, kTotallyDifferent };

struct GroupingScheme {
  GroupingKind kind = GroupingKind::kApplicationSpecific;
  std::size_t stride = 0;  // totally-different only

  static GroupingScheme application_specific() { return {GroupingKind::kApplicationSpecific, 0}; }
  static GroupingScheme programmer_specific() { return {GroupingKind::kProgrammerSpecific, 0}; }
  static GroupingScheme totally_different(std::size_t stride) {
    return {GroupingKind::kTotallyDifferent, stride};
  }

  // "application_specific", "programmer_specific", "totally_different_<s>".
  std::string name() const;

  friend bool operator==(const GroupingScheme&, const GroupingScheme&) = default;
};

struct Subset {
  GroupingScheme scheme;
  std::string id;
  std::vector<ProgramEntry> members;
};

// Strides s in [1, n) with gcd(s, n) == 1.
std::vector<std::size_t> admissible_strides(std::size_t n);
// The first three admissible strides (fewer if n has fewer).
std::vector<std::size_t> default_strides(std::size_t n);

// Application-specific: one subset per application, holding every
// programmer's program for it. Programmer-specific: one subset per
// programmer. Totally-different with stride s on an N x N grid: subset j
// holds cell(i, (j + s*i) mod N) for i in [0, N).
std::vector<Subset> enumerate_subsets(const CorpusGrid& grid,
                                      const GroupingScheme& scheme);

using FeatureMap = std::map<std::string, ProgramFeatures>;

// One value per unordered member pair (i < j), in index order.
std::vector<double> pairwise_values(const Subset& subset, MetricKind kind,
                                    const FeatureMap& features,
                                    const PatternUniverses& universes);

double subset_mean(std::span<const double> values);
double group_mean(std::span<const double> subset_means);
double td_aggregate(std::span<const double> grouping_means);
double cross_dataset_mean(std::span<const double> dataset_values);

// Rescales a group average so the totally-different baseline is 1 and larger
// means more similar: group/td for similarities, td/group for distances.
// Throws Error(kNonPositive) unless both values are > 0.
double normalize(double group_value, double td_value, MetricKind kind);

struct SubsetSummary {
  std::string id;
  std::vector<std::string> members;
  std::vector<double> pair_values;
  double mean = 0.0;
};

struct GroupingResult {
  GroupingScheme scheme;
  std::vector<SubsetSummary> subsets;
  double group_mean = 0.0;
};

// nullopt marks a degenerate cell (a zero average on either side).
struct NormalizedIndices {
  std::optional<double> programmer_specific;
  std::optional<double> application_specific;
  std::optional<double> totally_different;
};

struct MetricSection {
  MetricKind kind = MetricKind::kJaccard;
  // Application-specific, programmer-specific, then one per stride.
  std::vector<GroupingResult> groupings;
  double td_mean = 0.0;
  NormalizedIndices normalized;

  const GroupingResult& grouping(GroupingKind kind) const;
  std::vector<double> td_grouping_means() const;
};

struct StudyConfig {
  std::optional<std::vector<std::size_t>> strides;
  unsigned jobs = 1;
};

struct StudyReport {
  std::string dataset;
  std::vector<std::string> applications;
  std::vector<std::string> programmers;
  std::vector<std::size_t> strides;
  std::vector<MetricSection> metrics;  // in kAllMetrics order
  nlohmann::ordered_json metadata;

  const MetricSection& metric(MetricKind kind) const;
};

// Reads, parses and featurizes every grid entry. Read failures raise
// Error(kIo) and strict parse failures Error(kParse), both naming the file.
FeatureMap compute_corpus_features(const CorpusGrid& grid,
                                   const ParserConfig& parser,
                                   NgramMode mode, unsigned jobs = 1);

// Requires a square grid and features for every entry; programs without
// instructions raise Error(kEmptyProgram) naming the entry.
StudyReport run_study(const CorpusGrid& grid, const FeatureMap& features,
                      const StudyConfig& config = {},
                      std::string dataset_name = {});

// Cross-dataset view: consecutive datasets with the same grid size are pooled
// into one Average / Normalized block; a lone dataset is normalized alone.
struct MetricSummary {
  MetricKind kind = MetricKind::kJaccard;
  double programmer_specific = 0.0;
  double application_specific = 0.0;
  double totally_different = 0.0;
  NormalizedIndices normalized;
};

struct DatasetPool {
  std::vector<std::size_t> members;  // indices into the report list
  std::vector<MetricSummary> metrics;

  bool averaged() const { return members.size() > 1; }
  const MetricSummary& metric(MetricKind kind) const;
};

std::vector<DatasetPool> pool_datasets(std::span<const StudyReport> reports);

}  // namespace asmsim

#endif  // ASMSIM_CORPUS_HPP
