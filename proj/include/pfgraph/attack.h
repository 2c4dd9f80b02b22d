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

#ifndef PFGRAPH_ATTACK_H_
#define PFGRAPH_ATTACK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "pfgraph/correlation.h"
#include "pfgraph/graph.h"
#include "pfgraph/labeling.h"

namespace pfgraph {

using CorrelationModel =
    std::variant<ConditionalModel, GlobalModel, BinomialModel>;

// Pr(w labeled neighbors | state) for an edge with neighborhood size `deg`
// and a property of corpus frequency `freq`.
double NeighborhoodLikelihood(const CorrelationModel& model, SecretState state,
                              std::size_t w, std::size_t deg, std::size_t freq);

// A noisy count of the attacked property released with Laplace(0, lambda).
struct ReleasedCount {
  double value = 0.0;
  double lambda = 0.0;
};

struct AttackReport {
  TokenId property = 0;
  std::vector<EdgeIndex> targets;
  std::vector<bool> truth;
  double prior = 0.0;
  // Posterior Pr(present | neighborhood) per target.
  std::vector<double> posterior;
  double accuracy = 0.0;
  double auc = 0.0;
  // Posterior after also observing the released count, when one was given.
  std::vector<double> posterior_with_release;
  std::optional<double> accuracy_with_release;
  std::optional<double> auc_with_release;

  nlohmann::json ToJson() const;
};

// Area under the ROC curve (Mann-Whitney, ties counted half). 0.5 when
// either class is empty.
double Auc(std::span<const double> scores, const std::vector<bool>& labels);

// Seeded sample of `count` distinct edges (all edges if fewer), ascending.
std::vector<EdgeIndex> SampleTargets(const OrgGraph& graph, std::size_t count,
                                     std::uint64_t seed);

// Attacker knows the labels of every edge but the target, prior freq/|E| and
// the model. With a released count the attacker also knows the exact count
// of the other edges and weighs the Laplace likelihood of the release.
absl::StatusOr<AttackReport> EvaluateAttack(
    const OrgGraph& graph, const PropertyLabeling& labeling,
    const CorrelationModel& model, TokenId property,
    std::span<const EdgeIndex> targets,
    std::optional<ReleasedCount> release = std::nullopt);

}  // namespace pfgraph

#endif  // PFGRAPH_ATTACK_H_
