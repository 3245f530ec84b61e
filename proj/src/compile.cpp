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

#include "asmsim/compile.hpp"

#include <openssl/evp.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "asmsim/error.hpp"
#include "asmsim/parallel.hpp"

namespace asmsim {
namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(std::string_view text) {
  auto end = text.find('\n');
  return std::string(text.substr(0, end));
}

std::string run_capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"),
                                            pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 256> buf;
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe.get())) {
    out += buf.data();
  }
  return out;
}

int exit_status(int raw) {
  if (raw == -1) return -1;
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : 128 + WTERMSIG(raw);
}

}  // namespace

std::size_t CompileSummary::failures() const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.assembly ? 0 : 1;
  return n;
}

std::optional<fs::path> find_executable(std::string_view name) {
  if (name.empty()) return std::nullopt;
  auto usable = [](const fs::path& p) {
    std::error_code ec;
    return fs::is_regular_file(p, ec) && ::access(p.c_str(), X_OK) == 0;
  };
  if (name.find('/') != std::string_view::npos) {
    fs::path p(name);
    return usable(p) ? std::optional<fs::path>(p) : std::nullopt;
  }
  const char* env = std::getenv("PATH");
  std::string_view path = env ? env : "/usr/bin:/bin";
  while (true) {
    auto colon = path.find(':');
    std::string_view dir = path.substr(0, colon);
    fs::path candidate = fs::path(dir.empty() ? "." : dir) / name;
    if (usable(candidate)) return candidate;
    if (colon == std::string_view::npos) break;
    path.remove_prefix(colon + 1);
  }
  return std::nullopt;
}

std::string shell_quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string expand_command(std::string_view command_template,
                           std::string_view compiler,
                           std::span<const std::string> flags,
                           const fs::path& input, const fs::path& output) {
  std::string joined;
  for (const auto& f : flags) {
    if (!joined.empty()) joined += ' ';
    joined += shell_quote(f);
  }
  std::string out;
  std::size_t i = 0;
  while (i < command_template.size()) {
    auto open = command_template.find('{', i);
    if (open == std::string_view::npos) {
      out += command_template.substr(i);
      break;
    }
    out += command_template.substr(i, open - i);
    auto close = command_template.find('}', open);
    std::string_view key = close == std::string_view::npos
                               ? std::string_view()
                               : command_template.substr(open + 1, close - open - 1);
    if (key == "cc") {
      out += shell_quote(compiler);
    } else if (key == "flags") {
      out += joined;
    } else if (key == "input") {
      out += shell_quote(input.string());
    } else if (key == "output") {
      out += shell_quote(output.string());
    } else {
      out += '{';
      i = open + 1;
      continue;
    }
    i = close + 1;
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

CompileSummary compile_corpus(std::span<const ProgramEntry> entries,
                              const CompileOptions& options) {
  if (!find_executable(options.compiler)) {
    throw Error(ErrorCode::kCompilerMissing, options.compiler,
                "compiler not found (set --compiler, the config file, or " +
                    std::string("ASMSIM_CC)"));
  }
  std::error_code ec;
  fs::create_directories(options.cache_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, options.cache_dir.string(),
                "cannot create cache directory: " + ec.message());
  }

  CompileSummary summary;
  const std::string version = first_line(
      run_capture(shell_quote(options.compiler) + " --version 2>/dev/null"));
  summary.compiler["compiler"] = options.compiler;
  summary.compiler["command"] = options.command_template;
  summary.compiler["flags"] = options.flags;
  summary.compiler["version"] = version.empty() ? "unknown" : version;

  std::string signature = version + '\0' + options.command_template;
  for (const auto& f : options.flags) signature += '\0' + f;

  summary.outcomes.resize(entries.size());
  parallel_for(entries.size(), options.jobs, [&](std::size_t i) {
    CompileOutcome& outcome = summary.outcomes[i];
    outcome.entry = entries[i];
    auto source = read_all(entries[i].path);
    if (!source) {
      outcome.error = "cannot read " + entries[i].path.string();
      return;
    }
    const std::string key = sha256_hex(*source + '\0' + signature);
    const fs::path target = options.cache_dir / (key + ".s");
    std::error_code exists_ec;
    if (fs::is_regular_file(target, exists_ec)) {
      outcome.assembly = target;
      outcome.cache_hit = true;
      return;
    }
    const std::string tag = key + "." + std::to_string(i);
    const fs::path tmp = options.cache_dir / (tag + ".tmp.s");
    const fs::path log = options.cache_dir / (tag + ".log");
    const std::string command =
        expand_command(options.command_template, options.compiler,
                       options.flags, entries[i].path, tmp) +
        " >" + shell_quote(log.string()) + " 2>&1";
    const int status = exit_status(std::system(command.c_str()));
    std::error_code io;
    if (status != 0 || !fs::is_regular_file(tmp, io)) {
      std::string detail = first_line(read_all(log).value_or(""));
      outcome.error = "compiler exited with status " + std::to_string(status) +
                      (detail.empty() ? "" : ": " + detail);
      fs::remove(tmp, io);
      fs::remove(log, io);
      return;
    }
    fs::rename(tmp, target, io);
    fs::remove(log, io);
    if (io) {
      outcome.error = "cannot store " + target.string() + ": " + io.message();
      return;
    }
    outcome.assembly = target;
  });
  return summary;
}

nlohmann::ordered_json derived_manifest(const CompileSummary& summary,
                                        const fs::path& manifest_dir) {
  const fs::path base = fs::absolute(manifest_dir).lexically_normal();
  nlohmann::ordered_json doc;
  doc["metadata"]["compiler"] = summary.compiler;
  doc["programs"] = nlohmann::ordered_json::array();
  for (const auto& o : summary.outcomes) {
    if (!o.assembly) continue;
    fs::path rel = fs::absolute(*o.assembly).lexically_normal().lexically_relative(base);
    doc["programs"].push_back({{"id", o.entry.id},
                               {"path", rel.generic_string()},
                               {"programmer", o.entry.programmer},
                               {"application", o.entry.application}});
  }
  return doc;
}

}  // namespace asmsim
