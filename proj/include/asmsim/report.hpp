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

#ifndef ASMSIM_REPORT_HPP
#define ASMSIM_REPORT_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "asmsim/corpus.hpp"

namespace asmsim {

enum class OutputFormat { kJson, kCsv, kMarkdown };

std::optional<OutputFormat> parse_output_format(std::string_view name);
std::string_view output_format_name(OutputFormat format);

// Shortest decimal that round-trips to the same double.
std::string format_exact(double value);
// Fixed-point with the table precision of `kind`: 4 decimals for
// similarities, 2 for distances.
std::string format_metric(double value, MetricKind kind);
// 3 decimals.
std::string format_normalized(double value);

// Pair-level detail for every dataset plus the pooled summaries.
nlohmann::ordered_json report_to_json(std::span<const StudyReport> reports);

std::string render_json(std::span<const StudyReport> reports);
// Header: dataset,metric,grouping,row,subset,pairs,value
std::string render_csv(std::span<const StudyReport> reports);
// One summary table per metric: datasets as rows, groupings as columns,
// Average and Normalized rows per pool of equally sized datasets.
std::string render_markdown(std::span<const StudyReport> reports);

std::string render(std::span<const StudyReport> reports, OutputFormat format);

}  // namespace asmsim

#endif  // ASMSIM_REPORT_HPP
