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

#ifndef PFGRAPH_TASKS_H_
#define PFGRAPH_TASKS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "pfgraph/graph.h"
#include "pfgraph/labeling.h"
#include "pfgraph/mechanisms.h"

namespace pfgraph {

// Keeps at most `cap` tokens per edge, preferring corpus-frequent tokens
// (ties broken by token order). The vocabulary is unchanged.
absl::StatusOr<PropertyLabeling> CapLabeling(const PropertyLabeling& labeling,
                                             std::size_t cap);

// count[t] = number of edges labeled with t.
std::vector<double> TrueHistogram(const PropertyLabeling& labeling);

// count[t] = number of nodes using t. A node uses the tokens of its incident
// edges, at most `cap` of them: those on the most incident edges, ties broken
// by token order.
std::vector<double> NodeHistogram(const OrgGraph& graph,
                                  const PropertyLabeling& labeling,
                                  std::size_t cap);

// Edge-level counts for every mode except node, which counts per node.
std::vector<double> CountsForMode(const OrgGraph& graph,
                                  const PropertyLabeling& labeling,
                                  PrivacyMode mode, std::size_t cap);

struct HistogramResult {
  std::vector<double> noisy;
  std::vector<double> truth;
  std::size_t yield = 0;
  double yield_fraction = 0.0;
  double rmse_raw = 0.0;
  // Error after replacing negative noisy counts with zero.
  double rmse_clipped = 0.0;
  NoiseScale noise;
  std::uint64_t trial = 0;

  nlohmann::json ToJson() const;
};

// noisy[t] = truth[t] + Laplace(0, lambda), drawn from the trial's stream.
HistogramResult ReleaseHistogram(std::span<const double> truth,
                                 const NoiseScale& noise, std::uint64_t trial);

struct DpsuResult {
  std::vector<TokenId> released;
  double threshold = 0.0;
  double delta = 0.0;
  std::size_t yield = 0;
  NoiseScale noise;
  std::uint64_t trial = 0;

  nlohmann::json ToJson() const;
};

// 1 + lambda * ln(1 / (2 delta)).
double DpsuThreshold(double lambda, double delta);

// 1 / records^2.
double DefaultDpsuDelta(std::size_t records);

// Releases t iff weights[t] > 0 and weights[t] + Laplace(0, lambda) exceeds
// the threshold.
absl::StatusOr<DpsuResult> ReleaseDpsu(std::span<const double> weights,
                                       const NoiseScale& noise, double delta,
                                       std::uint64_t trial);

struct TrialSummary {
  std::vector<double> values;
  double mean = 0.0;
  // Sample standard deviation; 0 for a single trial.
  double std = 0.0;
};

TrialSummary Summarize(std::vector<double> values);

// Yield of `trials` independent DPSU releases (trial indices 0..trials-1).
absl::StatusOr<TrialSummary> RepeatDpsu(std::span<const double> weights,
                                        const NoiseScale& noise, double delta,
                                        std::size_t trials);

}  // namespace pfgraph

#endif  // PFGRAPH_TASKS_H_
