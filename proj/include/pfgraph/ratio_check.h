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

#ifndef PFGRAPH_RATIO_CHECK_H_
#define PFGRAPH_RATIO_CHECK_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "pfgraph/graph.h"

namespace pfgraph {

inline constexpr std::size_t kMaxRatioCheckEdges = 5;

// Joint distribution of one property's labels on a small graph:
// probability[x] is the chance that exactly the edges whose bits are set in x
// carry the property.
struct JointLabelModel {
  std::size_t edge_count = 0;
  std::vector<double> probability;
};

// Exact joint law of the seed-and-propagate process: each edge is a seed
// independently with `seed_probability`; each seed then labels each adjacent
// edge independently with `propagation`.
absl::StatusOr<JointLabelModel> PlantedJointModel(const OrgGraph& graph,
                                                  double seed_probability,
                                                  double propagation);

// Every edge independently labeled with probability p.
absl::StatusOr<JointLabelModel> IndependentJointModel(const OrgGraph& graph,
                                                      double p);

// max over edges i of W-infinity(Pr(count | X_i = 0), Pr(count | X_i = 1)),
// where count is the number of labeled edges.
absl::StatusOr<double> ExactPufferfishW(const JointLabelModel& model);

struct RatioCheckResult {
  double max_log_ratio = 0.0;
  EdgeIndex worst_edge = 0;
  double bin_width = 0.0;
  std::size_t bins = 0;
};

// Releases count + Laplace(0, lambda). For each edge, enumerates both
// conditional output laws over bins of width lambda/10 covering
// [min count - 10 lambda, max count + 10 lambda] and returns the largest
// |log ratio| over bins where both conditionals exceed 1e-6.
absl::StatusOr<RatioCheckResult> PufferfishRatioCheck(
    const JointLabelModel& model, double lambda);

}  // namespace pfgraph

#endif  // PFGRAPH_RATIO_CHECK_H_
