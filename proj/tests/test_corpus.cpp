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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "asmsim/corpus.hpp"
#include "asmsim/error.hpp"
#include "test_support.hpp"

using namespace asmsim;
namespace fs = std::filesystem;

namespace {

std::vector<ProgramEntry> grid_entries(std::size_t apps, std::size_t progs) {
  std::vector<ProgramEntry> out;
  for (std::size_t a = 0; a < apps; ++a) {
    for (std::size_t p = 0; p < progs; ++p) {
      std::string app = "a" + std::to_string(a);
      std::string prog = "p" + std::to_string(p);
      out.push_back({prog + "_" + app, prog + "_" + app + ".s", prog, app});
    }
  }
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

std::string error_text(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.diagnostic_line();
  }
  return {};
}

}  // namespace

TEST_CASE("load_manifest") {
  testing::TempDir dir("manifest");
  const fs::path base = dir.path();
  for (const char* f : {"asm/x.s", "x.s", "y.s"}) testing::spit(base / f, "\tnop\n");
  SUBCASE("empty") {
    CHECK(load_manifest(R"({"programs": []})", base).empty());
  }
  SUBCASE("paths resolve against the manifest directory") {
    auto e = load_manifest(
        R"({"programs": [{"id": "x", "path": "asm/x.s", "programmer": "p", "application": "a"}]})",
        base);
    REQUIRE(e.size() == 1);
    CHECK(e[0].path == base / "asm/x.s");
    CHECK(e[0].programmer == "p");
  }
  SUBCASE("duplicate id") {
    auto bytes = R"({"programs": [
      {"id": "x", "path": "x.s", "programmer": "p", "application": "a"},
      {"id": "x", "path": "y.s", "programmer": "q", "application": "a"}]})";
    CHECK(code_of([&] { load_manifest(bytes, base, "m.json"); }) == ErrorCode::kDuplicateId);
    CHECK(error_text([&] { load_manifest(bytes, base, "m.json"); }).find("m.json:programs[1]") !=
          std::string::npos);
  }
  SUBCASE("missing field") {
    CHECK(code_of([&] {
            load_manifest(R"({"programs": [{"id": "x", "path": "x.s", "programmer": "p"}]})", base);
          }) == ErrorCode::kMissingField);
  }
  SUBCASE("malformed json") {
    CHECK(code_of([&] { load_manifest("{\"programs\": [", base); }) == ErrorCode::kInvalidCorpus);
  }
  SUBCASE("unreadable program path") {
    CHECK(code_of([&] {
            load_manifest(
                R"({"programs": [{"id": "x", "path": "nope.s", "programmer": "p", "application": "a"}]})",
                base);
          }) == ErrorCode::kIo);
  }
  SUBCASE("unreadable manifest file") {
    CHECK(code_of([&] { load_manifest_file("/nonexistent/manifest.json"); }) == ErrorCode::kIo);
  }
  SUBCASE("bundled 5x5 manifest") {
    auto e = load_manifest_file(testing::source_dir() / "corpus/synthetic5x5/manifest.json");
    CHECK(e.size() == 25);
  }
}

TEST_CASE("load_study_manifest") {
  auto ds = load_study_manifest(testing::source_dir() / "corpus/study.json");
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].name == "5x5");
  CHECK(ds[0].entries.size() == 25);
  CHECK(ds[1].entries.size() == 9);
  auto single = load_study_manifest(testing::source_dir() / "corpus/synthetic3x3/manifest.json");
  CHECK(single.size() == 1);
  CHECK(single[0].entries.size() == 9);
}

TEST_CASE("build_grid") {
  SUBCASE("2x2") {
    auto entries = grid_entries(2, 2);
    auto g = build_grid(entries);
    CHECK(g.applications() == std::vector<std::string>{"a0", "a1"});
    CHECK(g.cell(1, 0).id == "p0_a1");
  }
  SUBCASE("3x3") {
    auto entries = grid_entries(3, 3);
    auto g = build_grid(entries);
    CHECK(g.square());
    CHECK(g.entries().size() == 9);
  }
  SUBCASE("first-appearance order") {
    auto entries = grid_entries(2, 3);
    std::reverse(entries.begin(), entries.end());
    auto g = build_grid(entries);
    CHECK(g.applications() == std::vector<std::string>{"a1", "a0"});
    CHECK(g.programmers() == std::vector<std::string>{"p2", "p1", "p0"});
  }
  SUBCASE("missing cell") {
    auto entries = grid_entries(5, 5);
    entries.erase(entries.begin() + 7);  // (a1, p2)
    CHECK(code_of([&] { build_grid(entries); }) == ErrorCode::kIncompleteGrid);
    CHECK(error_text([&] { build_grid(entries); }).find("missing (a1, p2)") !=
          std::string::npos);
  }
  SUBCASE("duplicate cell") {
    auto entries = grid_entries(2, 2);
    entries.push_back({"extra", "e.s", "p0", "a0"});
    CHECK(error_text([&] { build_grid(entries); }).find("duplicate (a0, p0)") !=
          std::string::npos);
  }
}

TEST_CASE("strides") {
  CHECK(admissible_strides(5) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(default_strides(5) == std::vector<std::size_t>{1, 2, 3});
  CHECK(admissible_strides(3) == std::vector<std::size_t>{1, 2});
  CHECK(default_strides(3) == std::vector<std::size_t>{1, 2});
  CHECK(admissible_strides(6) == std::vector<std::size_t>{1, 5});
}

TEST_CASE("enumerate_subsets") {
  auto entries = grid_entries(3, 3);
  auto g = build_grid(entries);
  SUBCASE("application specific") {
    auto s = enumerate_subsets(g, GroupingScheme::application_specific());
    REQUIRE(s.size() == 3);
    CHECK(s[0].id == "a0");
    for (const auto& m : s[1].members) CHECK(m.application == "a1");
  }
  SUBCASE("totally different, stride 1") {
    auto s = enumerate_subsets(g, GroupingScheme::totally_different(1));
    REQUIRE(s.size() == 3);
    auto ids = [](const Subset& sub) {
      std::vector<std::string> out;
      for (const auto& m : sub.members) out.push_back(m.id);
      return out;
    };
    CHECK(ids(s[0]) == std::vector<std::string>{"p0_a0", "p1_a1", "p2_a2"});
    CHECK(ids(s[1]) == std::vector<std::string>{"p1_a0", "p2_a1", "p0_a2"});
    CHECK(ids(s[2]) == std::vector<std::string>{"p2_a0", "p0_a1", "p1_a2"});
    CHECK(s[0].id == "1");
  }
  SUBCASE("invalid stride") {
    auto six = grid_entries(6, 6);
    auto g6 = build_grid(six);
    CHECK(code_of([&] { enumerate_subsets(g6, GroupingScheme::totally_different(2)); }) ==
          ErrorCode::kInvalidStride);
    CHECK(code_of([&] { enumerate_subsets(g, GroupingScheme::totally_different(0)); }) ==
          ErrorCode::kInvalidStride);
  }
}

TEST_CASE("means and normalization") {
  std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK(subset_mean(ones) == 1.0);
  std::vector<double> two{0.2, 0.4};
  CHECK(group_mean(two) == doctest::Approx(0.3));
  std::vector<double> halves{0.5, 0.5, 0.5};
  CHECK(td_aggregate(halves) == 0.5);
  CHECK(code_of([] { subset_mean({}); }) == ErrorCode::kEmptyInput);
  CHECK(code_of([] { cross_dataset_mean({}); }) == ErrorCode::kEmptyInput);

  std::vector<double> ps{0.4453, 0.5075, 0.4594, 0.4554, 0.4971};
  CHECK(cross_dataset_mean(ps) == doctest::Approx(0.4729).epsilon(0.0005 / 0.4729));
  std::vector<double> as{6.43, 6.8, 6.03, 6.27, 6.65};
  CHECK(std::abs(cross_dataset_mean(as) - 6.44) <= 0.005);

  CHECK(std::abs(normalize(0.4729, 0.4720, MetricKind::kJaccard) - 1.002) <= 0.002);
  CHECK(std::abs(normalize(0.6733, 0.4720, MetricKind::kJaccard) - 1.426) <= 0.002);
  CHECK(std::abs(normalize(6.44, 8.15, MetricKind::kEuclidean2) - 1.266) <= 0.002);
  CHECK(std::abs(normalize(7.67, 9.09, MetricKind::kEuclidean3) - 1.185) <= 0.002);
  CHECK(normalize(0.5, 0.5, MetricKind::kCosine) == 1.0);
  CHECK(code_of([] { normalize(0.0, 1.0, MetricKind::kEuclidean2); }) == ErrorCode::kNonPositive);
  CHECK(code_of([] { normalize(0.5, 0.0, MetricKind::kJaccard); }) == ErrorCode::kNonPositive);
}

namespace {

// A grid whose every cell holds the same listing, written under `dir`.
std::vector<ProgramEntry> write_identity_corpus(const fs::path& dir, std::size_t n,
                                                const std::string& text) {
  auto entries = grid_entries(n, n);
  for (auto& e : entries) {
    e.path = dir / e.path;
    testing::spit(e.path, text);
  }
  return entries;
}

StudyReport study_of(std::span<const ProgramEntry> entries, unsigned jobs = 1) {
  auto grid = build_grid(entries);
  auto features = compute_corpus_features(grid, {}, NgramMode::kBlocks, jobs);
  return run_study(grid, features, StudyConfig{std::nullopt, jobs}, "t");
}

}  // namespace

TEST_CASE("pairwise values and subset sizes") {
  testing::TempDir dir("pairs");
  auto entries = write_identity_corpus(dir.path(), 5, "\tmovs r0, #0\n\tadds r0, #1\n\tbx lr\n");
  auto grid = build_grid(entries);
  auto features = compute_corpus_features(grid, {}, NgramMode::kBlocks);
  std::vector<ProgramFeatures> all;
  for (const auto& [id, f] : features) all.push_back(f);
  auto u = build_universes(all);
  for (const auto& s : enumerate_subsets(grid, GroupingScheme::programmer_specific())) {
    auto v = pairwise_values(s, MetricKind::kJaccard, features, u);
    CHECK(v.size() == 10);
    for (double x : v) CHECK(x == 1.0);
  }
}

TEST_CASE("identity corpus") {
  testing::TempDir dir("identity");
  auto entries = write_identity_corpus(dir.path(), 5,
                                       "\tpush {r7, lr}\n\tmovs r0, #0\n\tpop {r7, pc}\n");
  auto r = study_of(entries);
  CHECK(r.strides == std::vector<std::size_t>{1, 2, 3});
  for (auto kind : kAllMetrics) {
    const auto& m = r.metric(kind);
    CHECK(m.groupings.size() == 5);
    const double expected = is_distance(kind) ? 0.0 : 1.0;
    for (const auto& g : m.groupings) CHECK(g.group_mean == expected);
    CHECK(m.td_mean == expected);
    if (is_distance(kind)) {
      CHECK_FALSE(m.normalized.application_specific.has_value());
      CHECK_FALSE(m.normalized.programmer_specific.has_value());
    } else {
      CHECK(m.normalized.application_specific == 1.0);
      CHECK(m.normalized.totally_different == 1.0);
    }
  }
}

TEST_CASE("empty program is named") {
  testing::TempDir dir("empty");
  auto entries = write_identity_corpus(dir.path(), 5, "\tmovs r0, #0\n\tbx lr\n");
  testing::spit(entries[12].path, ".text\n");
  try {
    study_of(entries);
    FAIL("expected EmptyProgram");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyProgram);
    CHECK(e.entity().find(entries[12].id) != std::string::npos);
  }
}

TEST_CASE("non-square grids are rejected by the study") {
  testing::TempDir dir("rect");
  auto entries = grid_entries(2, 3);
  for (auto& e : entries) {
    e.path = dir.path() / e.path;
    testing::spit(e.path, "\tnop\n");
  }
  CHECK_THROWS_AS(study_of(entries), Error);
}

namespace {

bool same_numbers(const StudyReport& a, const StudyReport& b) {
  for (auto kind : kAllMetrics) {
    const auto& x = a.metric(kind);
    const auto& y = b.metric(kind);
    if (x.td_mean != y.td_mean) return false;
    if (x.normalized.application_specific != y.normalized.application_specific) return false;
    if (x.normalized.programmer_specific != y.normalized.programmer_specific) return false;
    for (std::size_t g = 0; g < x.groupings.size(); ++g) {
      if (x.groupings[g].group_mean != y.groupings[g].group_mean) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("job count and entry order do not change results") {
  auto entries = load_manifest_file(testing::source_dir() / "corpus/synthetic5x5/manifest.json");
  auto base = study_of(entries, 1);
  CHECK(same_numbers(base, study_of(entries, 4)));
  CHECK(same_numbers(base, study_of(entries, 16)));

  // shuffling within first-appearance order keeps the grid layout identical
  std::mt19937_64 rng(5);
  auto shuffled = entries;
  std::shuffle(shuffled.begin() + 1, shuffled.end(), rng);
  auto r = study_of(shuffled);
  CHECK(same_numbers(base, r) == (r.applications == base.applications &&
                                  r.programmers == base.programmers));
  // the per-grouping means never depend on layout
  for (auto kind : kAllMetrics) {
    CHECK(r.metric(kind).grouping(GroupingKind::kApplicationSpecific).group_mean ==
          doctest::Approx(base.metric(kind).grouping(GroupingKind::kApplicationSpecific).group_mean)
              .epsilon(1e-12));
    CHECK(r.metric(kind).grouping(GroupingKind::kProgrammerSpecific).group_mean ==
          doctest::Approx(base.metric(kind).grouping(GroupingKind::kProgrammerSpecific).group_mean)
              .epsilon(1e-12));
  }
}

TEST_CASE("td aggregate equals the pooled mean") {
  auto entries = load_manifest_file(testing::source_dir() / "corpus/synthetic5x5/manifest.json");
  auto r = study_of(entries);
  for (auto kind : kAllMetrics) {
    const auto& m = r.metric(kind);
    double sum = 0;
    std::size_t count = 0;
    for (const auto& g : m.groupings) {
      if (g.scheme.kind != GroupingKind::kTotallyDifferent) continue;
      for (const auto& s : g.subsets) {
        for (double v : s.pair_values) {
          sum += v;
          ++count;
        }
      }
    }
    CHECK(count == 3 * 5 * 10);
    CHECK(std::abs(m.td_mean - sum / static_cast<double>(count)) <= 1e-12);
  }
}

TEST_CASE("pool_datasets") {
  auto ds = load_study_manifest(testing::source_dir() / "corpus/study.json");
  std::vector<StudyReport> reports;
  for (const auto& d : ds) reports.push_back(study_of(d.entries));
  auto pools = pool_datasets(reports);
  REQUIRE(pools.size() == 2);
  CHECK_FALSE(pools[0].averaged());
  CHECK(pools[0].metric(MetricKind::kJaccard).application_specific ==
        reports[0].metric(MetricKind::kJaccard).grouping(GroupingKind::kApplicationSpecific).group_mean);
}
