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

#include "asmsim/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <vector>

namespace asmsim {
namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view kDegenerate = "degenerate";

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string_view metric_title(MetricKind kind) {
  switch (kind) {
    case MetricKind::kJaccard:
      return "Existence of instructions (Jaccard similarity)";
    case MetricKind::kCosine:
      return "Frequency of instructions (cosine similarity)";
    case MetricKind::kEuclidean2:
      return "Two consecutive instruction patterns (Euclidean distance)";
    case MetricKind::kEuclidean3:
      return "Three consecutive instruction patterns (Euclidean distance)";
  }
  return "";
}

ojson optional_number(const std::optional<double>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson normalized_json(const NormalizedIndices& n) {
  ojson j;
  j["programmer_specific"] = optional_number(n.programmer_specific);
  j["application_specific"] = optional_number(n.application_specific);
  j["totally_different"] = optional_number(n.totally_different);
  return j;
}

std::string pool_label(const DatasetPool& pool,
                       std::span<const StudyReport> reports) {
  std::string label;
  for (std::size_t i : pool.members) {
    if (!label.empty()) label += '+';
    label += reports[i].dataset;
  }
  return label;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string optional_normalized(const std::optional<double>& v) {
  return v ? format_normalized(*v) : std::string(kDegenerate);
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "markdown" || name == "md") return OutputFormat::kMarkdown;
  return std::nullopt;
}

std::string_view output_format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kMarkdown: return "markdown";
  }
  return "";
}

std::string format_exact(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string format_metric(double value, MetricKind kind) {
  return fixed(value, is_distance(kind) ? 2 : 4);
}

std::string format_normalized(double value) { return fixed(value, 3); }

ojson report_to_json(std::span<const StudyReport> reports) {
  ojson root;
  ojson datasets = ojson::array();
  for (const auto& r : reports) {
    ojson d;
    d["name"] = r.dataset;
    d["applications"] = r.applications;
    d["programmers"] = r.programmers;
    d["strides"] = r.strides;
    if (!r.metadata.is_null()) d["metadata"] = r.metadata;
    ojson metrics = ojson::array();
    for (const auto& m : r.metrics) {
      ojson jm;
      jm["metric"] = metric_name(m.kind);
      ojson groupings = ojson::array();
      for (const auto& g : m.groupings) {
        ojson jg;
        jg["grouping"] = g.scheme.name();
        ojson subsets = ojson::array();
        for (const auto& s : g.subsets) {
          ojson js;
          js["id"] = s.id;
          js["members"] = s.members;
          ojson pairs = ojson::array();
          std::size_t k = 0;
          for (std::size_t i = 0; i < s.members.size(); ++i) {
            for (std::size_t j = i + 1; j < s.members.size(); ++j) {
              pairs.push_back(ojson{{"a", s.members[i]},
                                    {"b", s.members[j]},
                                    {"value", s.pair_values[k++]}});
            }
          }
          js["pairs"] = std::move(pairs);
          js["mean"] = s.mean;
          subsets.push_back(std::move(js));
        }
        jg["subsets"] = std::move(subsets);
        jg["mean"] = g.group_mean;
        groupings.push_back(std::move(jg));
      }
      jm["groupings"] = std::move(groupings);
      jm["td_mean"] = m.td_mean;
      jm["normalized"] = normalized_json(m.normalized);
      metrics.push_back(std::move(jm));
    }
    d["metrics"] = std::move(metrics);
    datasets.push_back(std::move(d));
  }
  root["datasets"] = std::move(datasets);

  ojson pools = ojson::array();
  for (const auto& pool : pool_datasets(reports)) {
    ojson jp;
    ojson names = ojson::array();
    for (std::size_t i : pool.members) names.push_back(reports[i].dataset);
    jp["datasets"] = std::move(names);
    jp["averaged"] = pool.averaged();
    ojson metrics = ojson::array();
    for (const auto& m : pool.metrics) {
      metrics.push_back(ojson{{"metric", metric_name(m.kind)},
                              {"programmer_specific", m.programmer_specific},
                              {"application_specific", m.application_specific},
                              {"totally_different", m.totally_different},
                              {"normalized", normalized_json(m.normalized)}});
    }
    jp["metrics"] = std::move(metrics);
    pools.push_back(std::move(jp));
  }
  root["summary"] = std::move(pools);
  return root;
}

std::string render_json(std::span<const StudyReport> reports) {
  return report_to_json(reports).dump(2) + "\n";
}

std::string render_csv(std::span<const StudyReport> reports) {
  std::string out = "dataset,metric,grouping,row,subset,pairs,value\n";
  auto row = [&out](std::string_view dataset, MetricKind kind,
                    std::string_view grouping, std::string_view type,
                    std::string_view subset, std::string_view pairs,
                    std::string_view value) {
    out += csv_field(dataset) + ',' + std::string(metric_name(kind)) + ',' +
           std::string(grouping) + ',' + std::string(type) + ',' +
           csv_field(subset) + ',' + std::string(pairs) + ',' +
           std::string(value) + '\n';
  };
  auto normalized_rows = [&row](std::string_view dataset, MetricKind kind,
                                const NormalizedIndices& n) {
    auto value = [](const std::optional<double>& v) {
      return v ? format_exact(*v) : std::string(kDegenerate);
    };
    row(dataset, kind, "programmer_specific", "normalized", "", "",
        value(n.programmer_specific));
    row(dataset, kind, "application_specific", "normalized", "", "",
        value(n.application_specific));
    row(dataset, kind, "totally_different", "normalized", "", "",
        value(n.totally_different));
  };

  for (const auto& r : reports) {
    for (const auto& m : r.metrics) {
      for (const auto& g : m.groupings) {
        for (const auto& s : g.subsets) {
          row(r.dataset, m.kind, g.scheme.name(), "subset", s.id,
              std::to_string(s.pair_values.size()), format_exact(s.mean));
        }
        row(r.dataset, m.kind, g.scheme.name(), "group_mean", "", "",
            format_exact(g.group_mean));
      }
      row(r.dataset, m.kind, "totally_different", "td_mean", "", "",
          format_exact(m.td_mean));
      normalized_rows(r.dataset, m.kind, m.normalized);
    }
  }
  for (const auto& pool : pool_datasets(reports)) {
    if (!pool.averaged()) continue;
    const std::string label = pool_label(pool, reports);
    for (const auto& m : pool.metrics) {
      row(label, m.kind, "programmer_specific", "average", "", "",
          format_exact(m.programmer_specific));
      row(label, m.kind, "application_specific", "average", "", "",
          format_exact(m.application_specific));
      row(label, m.kind, "totally_different", "average", "", "",
          format_exact(m.totally_different));
      normalized_rows(label, m.kind, m.normalized);
    }
  }
  return out;
}

std::string render_markdown(std::span<const StudyReport> reports) {
  std::size_t td_columns = 0;
  for (const auto& r : reports) td_columns = std::max(td_columns, r.strides.size());
  const auto pools = pool_datasets(reports);

  std::string out = "# Instruction-level similarity study\n\n";
  for (const auto& r : reports) {
    out += "- Data set " + md_cell(r.dataset) + ": " +
           std::to_string(r.applications.size()) + " applications x " +
           std::to_string(r.programmers.size()) +
           " programmers; totally-different strides ";
    for (std::size_t i = 0; i < r.strides.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(r.strides[i]);
    }
    if (r.metadata.is_object() && r.metadata.contains("compiler")) {
      const auto& c = r.metadata["compiler"];
      out += "; compiled with " + md_cell(c.value("version", std::string("unknown")));
    }
    out += "\n";
  }

  const std::size_t columns = 4 + td_columns;
  for (MetricKind kind : kAllMetrics) {
    out += "\n## " + std::string(metric_title(kind)) + "\n\n";
    out += "| Data Set | Programmer Specific | Application Specific | Totally Different |";
    for (std::size_t k = 1; k <= td_columns; ++k) {
      out += " Totally Different " + std::to_string(k) + " |";
    }
    out += "\n|";
    for (std::size_t c = 0; c < columns; ++c) out += "---|";
    out += "\n";

    auto emit = [&](const std::vector<std::string>& cells) {
      out += "|";
      for (std::size_t c = 0; c < columns; ++c) {
        out += " ";
        if (c < cells.size()) out += cells[c];
        out += " |";
      }
      out += "\n";
    };

    for (const auto& pool : pools) {
      for (std::size_t i : pool.members) {
        const MetricSection& m = reports[i].metric(kind);
        std::vector<std::string> cells{
            md_cell(reports[i].dataset),
            format_metric(m.grouping(GroupingKind::kProgrammerSpecific).group_mean, kind),
            format_metric(m.grouping(GroupingKind::kApplicationSpecific).group_mean, kind),
            format_metric(m.td_mean, kind)};
        for (double v : m.td_grouping_means()) cells.push_back(format_metric(v, kind));
        emit(cells);
      }
      const MetricSummary& s = pool.metric(kind);
      if (pool.averaged()) {
        emit({"Average", format_metric(s.programmer_specific, kind),
              format_metric(s.application_specific, kind),
              format_metric(s.totally_different, kind)});
      }
      emit({"Normalized", optional_normalized(s.normalized.programmer_specific),
            optional_normalized(s.normalized.application_specific),
            optional_normalized(s.normalized.totally_different)});
    }
  }
  return out;
}

std::string render(std::span<const StudyReport> reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return render_json(reports);
    case OutputFormat::kCsv: return render_csv(reports);
    case OutputFormat::kMarkdown: return render_markdown(reports);
  }
  return {};
}

}  // namespace asmsim
