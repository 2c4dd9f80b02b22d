// Copyright 2026 The pfgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFGRAPH_MECHANISMS_H_
#define PFGRAPH_MECHANISMS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "pfgraph/graph.h"
#include "pfgraph/rng.h"
#include "pfgraph/sensitivity.h"

namespace pfgraph {

enum class PrivacyMode { kEdge, kNode, kBinomial, kGlobal, kConditional, kGroup };

// In the order the comparison tables list them.
inline constexpr std::array<PrivacyMode, 6> kAllPrivacyModes = {
    PrivacyMode::kEdge,   PrivacyMode::kNode,        PrivacyMode::kBinomial,
    PrivacyMode::kGlobal, PrivacyMode::kConditional, PrivacyMode::kGroup};

std::string_view PrivacyModeName(PrivacyMode mode);
absl::StatusOr<PrivacyMode> ParsePrivacyMode(std::string_view name);

struct MechanismConfig {
  double epsilon = 1.0;
  // Markov-Quilt max-influence bound; 0 for the trivial quilt.
  double delta = 0.0;
  // Per-record contribution cap (distinct n-grams per edge or per node).
  std::size_t cap = 1000;
  PrivacyMode mode = PrivacyMode::kEdge;
  std::uint64_t seed = 0;

  absl::Status Validate() const;
};

// Laplace scale with the inputs that produced it.
struct NoiseScale {
  double lambda = 0.0;
  double w = 0.0;
  PrivacyMode mode = PrivacyMode::kEdge;
  std::size_t cap = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::string formula;

  nlohmann::json ToJson() const;
};

// What Calibrate may need: graph degree statistics for the group baseline and
// fitted W for the correlation-model modes.
struct SensitivitySource {
  DegreeStats stats;
  std::optional<double> conditional_w;
  std::optional<double> global_w;
  std::optional<double> binomial_w;

  void Add(const SensitivityReport& report);
};

// Card(X_N) for the trivial quilt: 2 * D_max - 1.
std::size_t TrivialQuiltCardinality(const DegreeStats& stats);

// lambda = c * W / epsilon, where W is 1 for edge and node mode, the trivial
// quilt cardinality for group mode, and the fitted W for the model modes.
absl::StatusOr<NoiseScale> Calibrate(const MechanismConfig& config,
                                     const SensitivitySource& source);

// Inverse-CDF Laplace(0, scale) draw from counter `counter` of `stream`.
absl::StatusOr<double> LaplaceSample(double scale, const NoiseStream& stream,
                                     std::uint64_t counter);

// Per-record budget giving epsilon-DP for groups of size k.
absl::StatusOr<double> GroupBudget(double epsilon, std::size_t k);

// L * |D_N| / (epsilon - delta).
absl::StatusOr<double> MarkovQuiltScale(double lipschitz,
                                        std::size_t neighborhood_card,
                                        double epsilon, double delta);

}  // namespace pfgraph

#endif  // PFGRAPH_MECHANISMS_H_
