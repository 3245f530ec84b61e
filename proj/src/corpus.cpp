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

#include "asmsim/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "asmsim/error.hpp"
#include "asmsim/parallel.hpp"

namespace asmsim {
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, path.string(), "read failed");
  return buf.str();
}

bool is_readable_file(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return false;
  std::ifstream in(path, std::ios::binary);
  return static_cast<bool>(in);
}

json parse_json(std::string_view bytes, std::string_view source) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidCorpus,
                std::string(source) + ":byte " + std::to_string(e.byte),
                "malformed JSON");
  }
}

std::string string_field(const json& obj, const char* key,
                         const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kMissingField, where,
                std::string("missing field '") + key + "'");
  }
  if (!it->is_string() || it->get_ref<const std::string&>().empty()) {
    throw Error(ErrorCode::kMissingField, where,
                std::string("field '") + key + "' must be a non-empty string");
  }
  return it->get<std::string>();
}

std::vector<ProgramEntry> parse_programs(const json& programs,
                                         const fs::path& base_dir,
                                         std::string_view source) {
  if (!programs.is_array()) {
    throw Error(ErrorCode::kInvalidCorpus, std::string(source),
                "'programs' must be an array");
  }
  std::vector<ProgramEntry> entries;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < programs.size(); ++i) {
    const std::string where =
        std::string(source) + ":programs[" + std::to_string(i) + "]";
    const json& p = programs[i];
    if (!p.is_object()) {
      throw Error(ErrorCode::kInvalidCorpus, where, "entry must be an object");
    }
    ProgramEntry e;
    e.id = string_field(p, "id", where);
    fs::path rel = string_field(p, "path", where);
    e.programmer = string_field(p, "programmer", where);
    e.application = string_field(p, "application", where);
    e.path = rel.is_absolute() ? rel : (base_dir / rel).lexically_normal();
    if (auto [it, fresh] = seen.emplace(e.id, i); !fresh) {
      throw Error(ErrorCode::kDuplicateId, where,
                  "id '" + e.id + "' already used by programs[" +
                      std::to_string(it->second) + "]");
    }
    if (!is_readable_file(e.path)) {
      throw Error(ErrorCode::kIo, where,
                  "cannot read '" + e.path.string() + "'");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

double checked_mean(std::span<const double> values, const char* what) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyInput, what, "mean of an empty list");
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::optional<double> try_normalize(double group, double td, MetricKind kind) {
  if (!(group > 0.0) || !(td > 0.0)) return std::nullopt;
  return normalize(group, td, kind);
}

}  // namespace

std::vector<ProgramEntry> load_manifest(std::string_view bytes,
                                        const fs::path& base_dir,
                                        std::string_view source) {
  json doc = parse_json(bytes, source);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidCorpus, std::string(source),
                "manifest must be a JSON object");
  }
  auto it = doc.find("programs");
  if (it == doc.end()) {
    throw Error(ErrorCode::kMissingField, std::string(source),
                "missing field 'programs'");
  }
  return parse_programs(*it, base_dir, source);
}

std::vector<ProgramEntry> load_manifest_file(const fs::path& path) {
  return load_manifest(read_file(path), path.parent_path(), path.string());
}

std::vector<Dataset> load_study_manifest(const fs::path& path) {
  const std::string source = path.string();
  json doc = parse_json(read_file(path), source);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidCorpus, source,
                "manifest must be a JSON object");
  }
  auto metadata_of = [](const json& obj) {
    auto m = obj.find("metadata");
    return m == obj.end() ? nlohmann::ordered_json()
                          : nlohmann::ordered_json::parse(m->dump());
  };
  const fs::path base = path.parent_path();
  if (!doc.contains("datasets")) {
    Dataset d;
    d.name = doc.value("name", path.stem().string());
    auto it = doc.find("programs");
    if (it == doc.end()) {
      throw Error(ErrorCode::kMissingField, source,
                  "missing field 'programs' or 'datasets'");
    }
    d.entries = parse_programs(*it, base, source);
    d.metadata = metadata_of(doc);
    return {std::move(d)};
  }
  const json& list = doc["datasets"];
  if (!list.is_array()) {
    throw Error(ErrorCode::kInvalidCorpus, source,
                "'datasets' must be an array");
  }
  std::vector<Dataset> datasets;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = source + ":datasets[" + std::to_string(i) + "]";
    const json& item = list[i];
    if (!item.is_object()) {
      throw Error(ErrorCode::kInvalidCorpus, where, "entry must be an object");
    }
    Dataset d;
    d.name = string_field(item, "name", where);
    if (item.contains("manifest")) {
      fs::path sub = string_field(item, "manifest", where);
      if (!sub.is_absolute()) sub = (base / sub).lexically_normal();
      json subdoc = parse_json(read_file(sub), sub.string());
      if (!subdoc.is_object() || !subdoc.contains("programs")) {
        throw Error(ErrorCode::kMissingField, sub.string(),
                    "missing field 'programs'");
      }
      d.entries = parse_programs(subdoc["programs"], sub.parent_path(),
                                 sub.string());
      d.metadata = metadata_of(subdoc);
    } else if (item.contains("programs")) {
      d.entries = parse_programs(item["programs"], base, where);
      d.metadata = metadata_of(item);
    } else {
      throw Error(ErrorCode::kMissingField, where,
                  "dataset needs 'manifest' or 'programs'");
    }
    datasets.push_back(std::move(d));
  }
  return datasets;
}

CorpusGrid::CorpusGrid(std::vector<std::string> applications,
                       std::vector<std::string> programmers,
                       std::vector<ProgramEntry> cells)
    : applications_(std::move(applications)),
      programmers_(std::move(programmers)),
      cells_(std::move(cells)) {}

CorpusGrid build_grid(std::span<const ProgramEntry> entries) {
  std::vector<std::string> apps;
  std::vector<std::string> progs;
  std::map<std::string, std::size_t> app_index;
  std::map<std::string, std::size_t> prog_index;
  for (const auto& e : entries) {
    if (app_index.emplace(e.application, apps.size()).second) {
      apps.push_back(e.application);
    }
    if (prog_index.emplace(e.programmer, progs.size()).second) {
      progs.push_back(e.programmer);
    }
  }
  if (apps.size() < 2 || progs.size() < 2) {
    throw Error(ErrorCode::kInvalidCorpus, "grid",
                "need at least 2 applications and 2 programmers, got " +
                    std::to_string(apps.size()) + " x " +
                    std::to_string(progs.size()));
  }

  std::vector<std::vector<const ProgramEntry*>> slots(apps.size() *
                                                      progs.size());
  for (const auto& e : entries) {
    slots[app_index[e.application] * progs.size() + prog_index[e.programmer]]
        .push_back(&e);
  }
  std::string problems;
  for (std::size_t a = 0; a < apps.size(); ++a) {
    for (std::size_t p = 0; p < progs.size(); ++p) {
      const auto& slot = slots[a * progs.size() + p];
      if (slot.size() == 1) continue;
      if (!problems.empty()) problems += "; ";
      problems += (slot.empty() ? "missing (" : "duplicate (") + apps[a] +
                  ", " + progs[p] + ")";
    }
  }
  if (!problems.empty()) {
    throw Error(ErrorCode::kIncompleteGrid, "grid", problems);
  }

  std::vector<ProgramEntry> cells;
  cells.reserve(slots.size());
  for (const auto& slot : slots) cells.push_back(*slot.front());
  return CorpusGrid(std::move(apps), std::move(progs), std::move(cells));
}

std::string GroupingScheme::name() const {
  switch (kind) {
    case GroupingKind::kApplicationSpecific: return "application_specific";
    case GroupingKind::kProgrammerSpecific: return "programmer_specific";
    case GroupingKind::kTotallyDifferent:
      return "totally_different_" + std::to_string(stride);
  }
  return "unknown";
}

std::vector<std::size_t> admissible_strides(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s < n; ++s) {
    if (std::gcd(s, n) == 1) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> default_strides(std::size_t n) {
  auto all = admissible_strides(n);
  if (all.size() > 3) all.resize(3);
  return all;
}

std::vector<Subset> enumerate_subsets(const CorpusGrid& grid,
                                      const GroupingScheme& scheme) {
  const std::size_t apps = grid.application_count();
  const std::size_t progs = grid.programmer_count();
  std::vector<Subset> subsets;
  switch (scheme.kind) {
    case GroupingKind::kApplicationSpecific:
      for (std::size_t a = 0; a < apps; ++a) {
        Subset s{scheme, grid.applications()[a], {}};
        for (std::size_t p = 0; p < progs; ++p) s.members.push_back(grid.cell(a, p));
        subsets.push_back(std::move(s));
      }
      break;
    case GroupingKind::kProgrammerSpecific:
      for (std::size_t p = 0; p < progs; ++p) {
        Subset s{scheme, grid.programmers()[p], {}};
        for (std::size_t a = 0; a < apps; ++a) s.members.push_back(grid.cell(a, p));
        subsets.push_back(std::move(s));
      }
      break;
    case GroupingKind::kTotallyDifferent: {
      if (!grid.square()) {
        throw Error(ErrorCode::kInvalidCorpus, "grid",
                    "totally-different groupings need as many programmers "
                    "as applications");
      }
      const std::size_t n = apps;
      if (scheme.stride < 1 || scheme.stride >= n ||
          std::gcd(scheme.stride, n) != 1) {
        throw Error(ErrorCode::kInvalidStride,
                    "stride " + std::to_string(scheme.stride),
                    "must be in [1, " + std::to_string(n) +
                        ") and coprime to " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        Subset s{scheme, std::to_string(j + 1), {}};
        for (std::size_t i = 0; i < n; ++i) {
          s.members.push_back(grid.cell(i, (j + scheme.stride * i) % n));
        }
        subsets.push_back(std::move(s));
      }
      break;
    }
  }
  return subsets;
}

std::vector<double> pairwise_values(const Subset& subset, MetricKind kind,
                                    const FeatureMap& features,
                                    const PatternUniverses& universes) {
  auto lookup = [&](const ProgramEntry& e) -> const ProgramFeatures& {
    auto it = features.find(e.id);
    if (it == features.end()) {
      throw Error(ErrorCode::kInvalidCorpus, "program '" + e.id + "'",
                  "no features computed");
    }
    return it->second;
  };
  const auto& m = subset.members;
  std::vector<double> values;
  values.reserve(m.size() * (m.size() - (m.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      try {
        values.push_back(
            compare_features(kind, lookup(m[i]), lookup(m[j]), universes).value);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInvalidCorpus) throw;
        throw Error(e.code(),
                    "pair (" + m[i].id + ", " + m[j].id + ") in " +
                        subset.scheme.name() + " subset " + subset.id,
                    std::string(metric_name(kind)) + ": " + e.message());
      }
    }
  }
  return values;
}

double subset_mean(std::span<const double> values) {
  return checked_mean(values, "subset");
}

double group_mean(std::span<const double> subset_means) {
  return checked_mean(subset_means, "grouping");
}

double td_aggregate(std::span<const double> grouping_means) {
  return checked_mean(grouping_means, "totally-different groupings");
}

double cross_dataset_mean(std::span<const double> dataset_values) {
  return checked_mean(dataset_values, "datasets");
}

double normalize(double group_value, double td_value, MetricKind kind) {
  if (!(group_value > 0.0) || !(td_value > 0.0)) {
    throw Error(ErrorCode::kNonPositive, std::string(metric_name(kind)),
                "normalization needs positive values, got group " +
                    std::to_string(group_value) + " and baseline " +
                    std::to_string(td_value));
  }
  return is_distance(kind) ? td_value / group_value : group_value / td_value;
}

const GroupingResult& MetricSection::grouping(GroupingKind k) const {
  for (const auto& g : groupings) {
    if (g.scheme.kind == k) return g;
  }
  throw Error(ErrorCode::kInvalidCorpus, std::string(metric_name(kind)),
              "grouping not present in report");
}

std::vector<double> MetricSection::td_grouping_means() const {
  std::vector<double> out;
  for (const auto& g : groupings) {
    if (g.scheme.kind == GroupingKind::kTotallyDifferent) {
      out.push_back(g.group_mean);
    }
  }
  return out;
}

const MetricSection& StudyReport::metric(MetricKind kind) const {
  for (const auto& m : metrics) {
    if (m.kind == kind) return m;
  }
  throw Error(ErrorCode::kInvalidCorpus, std::string(metric_name(kind)),
              "metric not present in report");
}

FeatureMap compute_corpus_features(const CorpusGrid& grid,
                                   const ParserConfig& parser, NgramMode mode,
                                   unsigned jobs) {
  const auto& entries = grid.entries();
  std::vector<ProgramFeatures> slots(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i) {
    const auto& e = entries[i];
    std::string text = read_file(e.path);
    AssemblyProgram program = parse_assembly(text, parser, e.path.string());
    slots[i] = compute_features(program, parser, mode);
  });
  FeatureMap out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out.emplace(entries[i].id, std::move(slots[i]));
  }
  return out;
}

StudyReport run_study(const CorpusGrid& grid, const FeatureMap& features,
                      const StudyConfig& config, std::string dataset_name) {
  if (!grid.square()) {
    throw Error(ErrorCode::kInvalidCorpus, "grid",
                "a study needs as many programmers as applications, got " +
                    std::to_string(grid.programmer_count()) + " programmers and " +
                    std::to_string(grid.application_count()) + " applications");
  }
  std::vector<ProgramFeatures> ordered;
  ordered.reserve(grid.entries().size());
  for (const auto& e : grid.entries()) {
    auto it = features.find(e.id);
    if (it == features.end()) {
      throw Error(ErrorCode::kInvalidCorpus, "program '" + e.id + "'",
                  "no features computed");
    }
    if (it->second.frequency.empty()) {
      throw Error(ErrorCode::kEmptyProgram,
                  "program '" + e.id + "' (" + e.application + ", " +
                      e.programmer + ")",
                  "no instructions in " + e.path.string());
    }
    ordered.push_back(it->second);
  }
  const PatternUniverses universes = build_universes(ordered);

  StudyReport report;
  report.dataset = std::move(dataset_name);
  report.applications = grid.applications();
  report.programmers = grid.programmers();
  report.strides = config.strides.value_or(default_strides(grid.application_count()));
  if (report.strides.empty()) {
    throw Error(ErrorCode::kInvalidStride, "strides",
                "at least one totally-different stride is required");
  }

  std::vector<std::pair<GroupingScheme, std::vector<Subset>>> groupings;
  groupings.emplace_back(GroupingScheme::application_specific(),
                         enumerate_subsets(grid, GroupingScheme::application_specific()));
  groupings.emplace_back(GroupingScheme::programmer_specific(),
                         enumerate_subsets(grid, GroupingScheme::programmer_specific()));
  for (std::size_t s : report.strides) {
    auto scheme = GroupingScheme::totally_different(s);
    groupings.emplace_back(scheme, enumerate_subsets(grid, scheme));
  }

  // Flatten (metric, grouping, subset) into independent tasks; aggregation
  // below walks the slots in index order.
  struct Task {
    MetricKind kind;
    const Subset* subset;
  };
  std::vector<Task> tasks;
  for (MetricKind kind : kAllMetrics) {
    for (const auto& [scheme, subsets] : groupings) {
      for (const auto& subset : subsets) tasks.push_back({kind, &subset});
    }
  }
  std::vector<std::vector<double>> values(tasks.size());
  parallel_for(tasks.size(), config.jobs, [&](std::size_t t) {
    values[t] = pairwise_values(*tasks[t].subset, tasks[t].kind, features,
                                universes);
  });

  std::size_t t = 0;
  for (MetricKind kind : kAllMetrics) {
    MetricSection section;
    section.kind = kind;
    for (const auto& [scheme, subsets] : groupings) {
      GroupingResult result;
      result.scheme = scheme;
      std::vector<double> means;
      for (const auto& subset : subsets) {
        SubsetSummary summary;
        summary.id = subset.id;
        for (const auto& m : subset.members) summary.members.push_back(m.id);
        summary.pair_values = std::move(values[t++]);
        summary.mean = subset_mean(summary.pair_values);
        means.push_back(summary.mean);
        result.subsets.push_back(std::move(summary));
      }
      result.group_mean = group_mean(means);
      section.groupings.push_back(std::move(result));
    }
    section.td_mean = td_aggregate(section.td_grouping_means());
    section.normalized.programmer_specific = try_normalize(
        section.grouping(GroupingKind::kProgrammerSpecific).group_mean,
        section.td_mean, kind);
    section.normalized.application_specific = try_normalize(
        section.grouping(GroupingKind::kApplicationSpecific).group_mean,
        section.td_mean, kind);
    section.normalized.totally_different =
        try_normalize(section.td_mean, section.td_mean, kind);
    report.metrics.push_back(std::move(section));
  }
  return report;
}

const MetricSummary& DatasetPool::metric(MetricKind kind) const {
  for (const auto& m : metrics) {
    if (m.kind == kind) return m;
  }
  throw Error(ErrorCode::kInvalidCorpus, std::string(metric_name(kind)),
              "metric not present in pool");
}

std::vector<DatasetPool> pool_datasets(std::span<const StudyReport> reports) {
  std::vector<DatasetPool> pools;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const bool extends =
        !pools.empty() &&
        reports[pools.back().members.back()].applications.size() ==
            reports[i].applications.size();
    if (!extends) pools.emplace_back();
    pools.back().members.push_back(i);
  }
  for (auto& pool : pools) {
    for (MetricKind kind : kAllMetrics) {
      std::vector<double> ps;
      std::vector<double> as;
      std::vector<double> td;
      for (std::size_t i : pool.members) {
        const MetricSection& m = reports[i].metric(kind);
        ps.push_back(m.grouping(GroupingKind::kProgrammerSpecific).group_mean);
        as.push_back(m.grouping(GroupingKind::kApplicationSpecific).group_mean);
        for (double v : m.td_grouping_means()) td.push_back(v);
      }
      MetricSummary summary;
      summary.kind = kind;
      summary.programmer_specific = cross_dataset_mean(ps);
      summary.application_specific = cross_dataset_mean(as);
      summary.totally_different = td_aggregate(td);
      summary.normalized.programmer_specific =
          try_normalize(summary.programmer_specific, summary.totally_different, kind);
      summary.normalized.application_specific =
          try_normalize(summary.application_specific, summary.totally_different, kind);
      summary.normalized.totally_different =
          try_normalize(summary.totally_different, summary.totally_different, kind);
      pool.metrics.push_back(summary);
    }
  }
  return pools;
}

}  // namespace asmsim
