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

#ifndef ASMSIM_METRICS_HPP
#define ASMSIM_METRICS_HPP

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include "asmsim/error.hpp"
#include "asmsim/features.hpp"

namespace asmsim {

enum class MetricKind { kJaccard, kCosine, kEuclidean2, kEuclidean3 };

inline constexpr std::array<MetricKind, 4> kAllMetrics = {
    MetricKind::kJaccard, MetricKind::kCosine, MetricKind::kEuclidean2,
    MetricKind::kEuclidean3};

// "jaccard", "cosine", "euclidean2", "euclidean3".
std::string_view metric_name(MetricKind kind);
// Accepts the names above plus the aliases "ngram2" and "ngram3".
std::optional<MetricKind> parse_metric(std::string_view name);

constexpr bool is_distance(MetricKind kind) {
  return kind == MetricKind::kEuclidean2 || kind == MetricKind::kEuclidean3;
}

constexpr std::size_t pattern_length(MetricKind kind) {
  return kind == MetricKind::kEuclidean3 ? 3 : 2;
}

struct SimilarityValue {
  double value = 0.0;
  MetricKind kind = MetricKind::kJaccard;
};

// Cosine of the angle between two non-negative dense vectors. Throws
// Error(kEmptyProgram) when either vector is zero.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine_similarity(
    const Eigen::MatrixBase<DerivedA>& a,
    const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Scalar aa = a.squaredNorm();
  const Scalar bb = b.squaredNorm();
  if (aa == Scalar(0) || bb == Scalar(0)) {
    throw Error(ErrorCode::kEmptyProgram, "",
                "cosine similarity is undefined for an empty program");
  }
  // sqrt(aa * bb) rather than norm() * norm(): the product commutes and
  // sqrt(x * x) == x, so cos(x, x) is exactly 1.
  const Scalar c = a.dot(b) / std::sqrt(aa * bb);
  return std::clamp(c, Scalar(0), Scalar(1));
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar euclidean_distance(
    const Eigen::MatrixBase<DerivedA>& a,
    const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).norm();
}

// |s1 ∩ s2| / |s1 ∪ s2|, with jaccard(∅, ∅) = 1.
SimilarityValue jaccard(const MnemonicSet& s1, const MnemonicSet& s2);

SimilarityValue cosine(const FrequencyVector& a, const FrequencyVector& b);

// Distance between the boolean vectors of p1 and p2 over `universe`; equal
// to sqrt(|p1 Δ p2|).
SimilarityValue euclidean_pattern_distance(const PatternSet& p1,
                                           const PatternSet& p2,
                                           const PatternUniverse& universe);

struct PatternUniverses {
  PatternUniverse bigrams{2, {}, {}};
  PatternUniverse trigrams{3, {}, {}};

  const PatternUniverse& for_length(std::size_t n) const {
    return n == 3 ? trigrams : bigrams;
  }
};

PatternUniverses build_universes(std::span<const ProgramFeatures> features);

SimilarityValue compare_features(MetricKind kind, const ProgramFeatures& a,
                                 const ProgramFeatures& b,
                                 const PatternUniverses& universes);

}  // namespace asmsim

#endif  // ASMSIM_METRICS_HPP
