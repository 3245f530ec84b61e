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

// asmsim: instruction-level program similarity from the command line.
//
//   asmsim extract FILE|DIR... [--glob PATTERN] [--out DIR]
//   asmsim compare A.s B.s [--metric jaccard|cosine|ngram2|ngram3|all]
//   asmsim compile MANIFEST [--out DERIVED.json] [--cache-dir DIR]
//   asmsim study MANIFEST [--out FILE]
//
// Global flags: --config --format --jobs --strict --linear-ngrams --strides

#include <fnmatch.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asmsim/compile.hpp"
#include "asmsim/config.hpp"
#include "asmsim/corpus.hpp"
#include "asmsim/error.hpp"
#include "asmsim/features.hpp"
#include "asmsim/metrics.hpp"
#include "asmsim/report.hpp"

namespace fs = std::filesystem;
using asmsim::Error;
using asmsim::ErrorCode;

namespace {

struct GlobalFlags {
  std::optional<std::string> config;
  std::optional<std::string> format;
  std::optional<unsigned> jobs;
  bool strict = false;
  bool linear_ngrams = false;
  std::optional<std::string> strides;
  std::optional<std::string> compiler;
  std::optional<std::string> cache_dir;
};

asmsim::ToolConfig resolve_config(const GlobalFlags& flags) {
  std::optional<fs::path> file;
  if (flags.config) file = *flags.config;
  asmsim::ToolConfig config = asmsim::load_tool_config(file);
  if (flags.format) {
    auto f = asmsim::parse_output_format(*flags.format);
    if (!f) {
      throw Error(ErrorCode::kInvalidConfig, "--format",
                  "expected json, csv or markdown");
    }
    config.output_format = *f;
  }
  if (flags.jobs) config.jobs = *flags.jobs;
  if (flags.strict) config.parser.strict = true;
  if (flags.linear_ngrams) config.ngram_mode = asmsim::NgramMode::kLinear;
  if (flags.strides) config.strides = asmsim::parse_stride_list(*flags.strides);
  if (flags.compiler) config.compiler = *flags.compiler;
  if (flags.cache_dir) config.cache_dir = *flags.cache_dir;
  config.validate();
  return config;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, path.string(), "cannot write file");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, path.string(), "write failed");
}

asmsim::AssemblyProgram load_program(const fs::path& path,
                                     const asmsim::ParserConfig& parser) {
  auto program = asmsim::parse_assembly(read_text(path), parser, path.string());
  for (const auto& d : program.diagnostics) {
    std::cerr << "warning\tparse\t" << path.string() << ':' << d.line_no << '\t'
              << d.message << '\n';
  }
  return program;
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs,
                                    const std::string& glob) {
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    fs::path p(input);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::recursive_directory_iterator(p, ec)) {
        if (!e.is_regular_file()) continue;
        if (::fnmatch(glob.c_str(), e.path().filename().c_str(), 0) == 0) {
          found.push_back(e.path());
        }
      }
      if (ec) throw Error(ErrorCode::kIo, p.string(), ec.message());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

int cmd_extract(const asmsim::ToolConfig& config,
                const std::vector<std::string>& inputs, const std::string& glob,
                const std::optional<std::string>& out_dir) {
  const auto files = expand_inputs(inputs, glob);
  if (out_dir) fs::create_directories(*out_dir);
  for (const auto& file : files) {
    auto program = load_program(file, config.parser);
    auto features = asmsim::compute_features(program, config.parser, config.ngram_mode);
    nlohmann::ordered_json dump = asmsim::features_to_json(features);
    if (out_dir) {
      write_text(fs::path(*out_dir) / (file.stem().string() + ".json"),
                 dump.dump(2) + "\n");
    } else {
      nlohmann::ordered_json line;
      line["source"] = file.generic_string();
      for (auto& [k, v] : dump.items()) line[k] = v;
      std::cout << line.dump() << '\n';
    }
  }
  return 0;
}

int cmd_compare(const asmsim::ToolConfig& config, const std::string& a,
                const std::string& b, const std::string& metric) {
  std::vector<asmsim::MetricKind> kinds;
  if (metric == "all") {
    kinds.assign(asmsim::kAllMetrics.begin(), asmsim::kAllMetrics.end());
  } else if (auto k = asmsim::parse_metric(metric)) {
    kinds.push_back(*k);
  } else {
    throw Error(ErrorCode::kInvalidConfig, "--metric",
                "expected jaccard, cosine, ngram2, ngram3 or all");
  }
  std::vector<asmsim::ProgramFeatures> f;
  for (const auto& path : {a, b}) {
    f.push_back(asmsim::compute_features(load_program(path, config.parser),
                                         config.parser, config.ngram_mode));
  }
  const auto universes = asmsim::build_universes(f);
  nlohmann::ordered_json json;
  std::string text;
  for (auto kind : kinds) {
    double v;
    try {
      v = asmsim::compare_features(kind, f[0], f[1], universes).value;
    } catch (const Error& e) {
      throw Error(e.code(), a + " vs " + b,
                  std::string(asmsim::metric_name(kind)) + ": " + e.message());
    }
    json[std::string(asmsim::metric_name(kind))] = v;
    text += std::string(asmsim::metric_name(kind)) + '\t' +
            asmsim::format_exact(v) + '\n';
  }
  std::cout << (config.output_format == asmsim::OutputFormat::kJson
                    ? json.dump(2) + "\n"
                    : text);
  return 0;
}

int cmd_compile(const asmsim::ToolConfig& config, const fs::path& manifest,
                const std::optional<std::string>& out) {
  const auto entries = asmsim::load_manifest_file(manifest);
  const fs::path dir = manifest.parent_path();
  asmsim::CompileOptions options;
  options.compiler = config.compiler;
  options.command_template = config.compiler_command;
  options.flags = config.compiler_flags;
  options.cache_dir = config.cache_dir.value_or(dir / ".asmsim-cache");
  options.jobs = config.jobs;
  auto summary = asmsim::compile_corpus(entries, options);

  const fs::path derived =
      out ? fs::path(*out) : dir / (manifest.stem().string() + ".asm.json");
  write_text(derived,
             asmsim::derived_manifest(summary, derived.parent_path()).dump(2) + "\n");

  std::size_t hits = 0;
  for (const auto& o : summary.outcomes) {
    hits += o.cache_hit ? 1 : 0;
    if (!o.assembly) {
      std::cerr << "error\tcompile_failed\t" << o.entry.id << '\t' << o.error
                << '\n';
    }
  }
  std::cerr << "compiled " << summary.outcomes.size() - summary.failures()
            << " of " << summary.outcomes.size() << " programs (" << hits
            << " cached), " << summary.failures() << " failed; manifest "
            << derived.string() << '\n';
  return summary.failures() == 0
             ? 0
             : asmsim::exit_code_for(ErrorCode::kCompileFailed);
}

int cmd_study(const asmsim::ToolConfig& config, const fs::path& manifest,
              const std::optional<std::string>& out) {
  auto datasets = asmsim::load_study_manifest(manifest);
  std::vector<asmsim::StudyReport> reports;
  for (auto& d : datasets) {
    asmsim::CorpusGrid grid = [&] {
      try {
        return asmsim::build_grid(d.entries);
      } catch (const Error& e) {
        throw Error(e.code(), "dataset " + d.name + " " + e.entity(), e.message());
      }
    }();
    auto features = asmsim::compute_corpus_features(grid, config.parser,
                                                    config.ngram_mode, config.jobs);
    asmsim::StudyConfig study;
    study.strides = config.strides;
    study.jobs = config.jobs;
    reports.push_back(asmsim::run_study(grid, features, study, d.name));
    reports.back().metadata = std::move(d.metadata);
  }
  std::string text = asmsim::render(reports, config.output_format);
  if (out) {
    write_text(*out, text);
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instruction-level similarity of assembly programs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--config", flags.config, "JSON config file");
  app.add_option("--format", flags.format, "json, csv or markdown");
  app.add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--strict", flags.strict, "abort on unclassifiable lines");
  app.add_flag("--linear-ngrams", flags.linear_ngrams,
               "let n-gram windows cross basic-block boundaries");
  app.add_option("--strides", flags.strides,
                 "totally-different strides, e.g. 1,2,3");

  std::vector<std::string> extract_inputs;
  std::string glob = "*.s";
  std::optional<std::string> extract_out;
  auto* extract = app.add_subcommand("extract", "dump per-file features as JSON");
  extract->add_option("inputs", extract_inputs, "assembly files or directories")
      ->required();
  extract->add_option("--glob", glob, "file pattern for directory inputs");
  extract->add_option("--out", extract_out, "write <stem>.json files here");

  std::string cmp_a, cmp_b, metric = "all";
  auto* compare = app.add_subcommand("compare", "compare two assembly files");
  compare->add_option("a", cmp_a)->required();
  compare->add_option("b", cmp_b)->required();
  compare->add_option("--metric", metric, "jaccard|cosine|ngram2|ngram3|all");

  std::string compile_manifest;
  std::optional<std::string> compile_out;
  auto* compile = app.add_subcommand("compile", "cross-compile C sources to assembly");
  compile->add_option("manifest", compile_manifest)->required();
  compile->add_option("--out", compile_out, "derived manifest path");
  compile->add_option("--cache-dir", flags.cache_dir, "assembly cache directory");
  compile->add_option("--compiler", flags.compiler, "compiler executable");

  std::string study_manifest;
  std::optional<std::string> study_out;
  auto* study = app.add_subcommand("study", "run the grouping study");
  study->add_option("manifest", study_manifest)->required();
  study->add_option("--out", study_out, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const asmsim::ToolConfig config = resolve_config(flags);
    if (*extract) return cmd_extract(config, extract_inputs, glob, extract_out);
    if (*compare) return cmd_compare(config, cmp_a, cmp_b, metric);
    if (*compile) return cmd_compile(config, compile_manifest, compile_out);
    if (*study) return cmd_study(config, study_manifest, study_out);
  } catch (const Error& e) {
    std::cerr << e.diagnostic_line() << '\n';
    return asmsim::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error\tinternal\t-\t" << e.what() << '\n';
    return 1;
  }
  return 1;
}
