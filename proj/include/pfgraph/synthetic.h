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

#ifndef PFGRAPH_SYNTHETIC_H_
#define PFGRAPH_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "pfgraph/graph.h"
#include "pfgraph/ingest.h"
#include "pfgraph/labeling.h"

namespace pfgraph {

// Parameters of the synthetic organization. The defaults give roughly 400
// people and 20k correspondent pairs.
struct SyntheticSpec {
  std::size_t node_count = 400;
  // Reporting tree fan-out; siblings under one manager all correspond.
  std::size_t branching = 5;
  // Each list is a random subset of people who all post to it.
  std::vector<std::size_t> list_sizes = {120, 110, 100, 90};
  std::size_t vocabulary_size = 600;
  // Seeding probability of the most common property; rank r gets
  // seed_probability / (r + 1)^zipf_exponent.
  double seed_probability = 0.004;
  double zipf_exponent = 1.0;
  // Probability that a neighbor of a seeded edge picks up the property.
  double propagation = 0.3;
  std::uint64_t seed = 0;

  absl::Status Validate() const;
  nlohmann::json ToJson() const;
  static absl::StatusOr<SyntheticSpec> FromJson(const nlohmann::json& j);
};

struct SyntheticCorpus {
  // Raw corpus; list posts are addressed to list ids.
  std::vector<Message> messages;
  ListTable lists;
  OrgGraph graph;
  // Planted labels after propagation (cap = vocabulary_size, never binding).
  PropertyLabeling labeling;
  // Seed edges only, before propagation.
  PropertyLabeling seeds;
};

// Deterministic for a fixed spec. Message bodies carry exactly one planted
// token each, so LabelEdges over the expanded corpus reproduces `labeling`.
absl::StatusOr<SyntheticCorpus> GenerateSynthetic(const SyntheticSpec& spec);

// Pronounceable word for a property rank, unique per rank.
std::string SyntheticWord(std::size_t rank);

}  // namespace pfgraph

#endif  // PFGRAPH_SYNTHETIC_H_
