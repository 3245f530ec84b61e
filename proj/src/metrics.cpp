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

#include "asmsim/metrics.hpp"

#include <iterator>
#include <vector>

namespace asmsim {

std::string_view metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::kJaccard: return "jaccard";
    case MetricKind::kCosine: return "cosine";
    case MetricKind::kEuclidean2: return "euclidean2";
    case MetricKind::kEuclidean3: return "euclidean3";
  }
  return "unknown";
}

std::optional<MetricKind> parse_metric(std::string_view name) {
  if (name == "jaccard") return MetricKind::kJaccard;
  if (name == "cosine") return MetricKind::kCosine;
  if (name == "euclidean2" || name == "ngram2") return MetricKind::kEuclidean2;
  if (name == "euclidean3" || name == "ngram3") return MetricKind::kEuclidean3;
  return std::nullopt;
}

SimilarityValue jaccard(const MnemonicSet& s1, const MnemonicSet& s2) {
  if (s1.empty() && s2.empty()) return {1.0, MetricKind::kJaccard};
  std::size_t common = 0;
  auto i1 = s1.begin();
  auto i2 = s2.begin();
  while (i1 != s1.end() && i2 != s2.end()) {
    if (*i1 < *i2) {
      ++i1;
    } else if (*i2 < *i1) {
      ++i2;
    } else {
      ++common;
      ++i1;
      ++i2;
    }
  }
  const std::size_t total = s1.size() + s2.size() - common;
  return {static_cast<double>(common) / static_cast<double>(total),
          MetricKind::kJaccard};
}

SimilarityValue cosine(const FrequencyVector& a, const FrequencyVector& b) {
  auto [va, vb] = align_frequencies<double>(a, b);
  return {cosine_similarity(va, vb), MetricKind::kCosine};
}

SimilarityValue euclidean_pattern_distance(const PatternSet& p1,
                                           const PatternSet& p2,
                                           const PatternUniverse& universe) {
  if (p1.n != p2.n) {
    throw Error(ErrorCode::kMixedPatternLength, "pattern sets",
                "cannot compare n=" + std::to_string(p1.n) + " with n=" +
                    std::to_string(p2.n));
  }
  const MetricKind kind =
      p1.n == 3 ? MetricKind::kEuclidean3 : MetricKind::kEuclidean2;
  if (universe.n != p1.n && (!p1.patterns.empty() || !p2.patterns.empty())) {
    throw Error(ErrorCode::kMixedPatternLength, "universe",
                "universe has n=" + std::to_string(universe.n) +
                    ", patterns have n=" + std::to_string(p1.n));
  }
  return {euclidean_distance(to_boolean_vector<double>(p1, universe),
                             to_boolean_vector<double>(p2, universe)),
          kind};
}

PatternUniverses build_universes(std::span<const ProgramFeatures> features) {
  std::vector<PatternSet> twos;
  std::vector<PatternSet> threes;
  twos.reserve(features.size());
  threes.reserve(features.size());
  for (const auto& f : features) {
    twos.push_back(f.patterns2);
    threes.push_back(f.patterns3);
  }
  PatternUniverses u;
  if (!features.empty()) {
    u.bigrams = build_universe(twos);
    u.trigrams = build_universe(threes);
  }
  return u;
}

SimilarityValue compare_features(MetricKind kind, const ProgramFeatures& a,
                                 const ProgramFeatures& b,
                                 const PatternUniverses& universes) {
  switch (kind) {
    case MetricKind::kJaccard:
      return jaccard(a.existence, b.existence);
    case MetricKind::kCosine:
      return cosine(a.frequency, b.frequency);
    case MetricKind::kEuclidean2:
    case MetricKind::kEuclidean3: {
      const std::size_t n = pattern_length(kind);
      return euclidean_pattern_distance(a.patterns(n), b.patterns(n),
                                        universes.for_length(n));
    }
  }
  return {};
}

}  // namespace asmsim
