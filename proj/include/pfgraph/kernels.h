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

#ifndef PFGRAPH_KERNELS_H_
#define PFGRAPH_KERNELS_H_

// Data-parallel inner loops. Each OpenMP kernel has a serial twin with the
// same contract; the tests require bit-identical results from both.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pfgraph/graph.h"
#include "pfgraph/labeling.h"
#include "pfgraph/rng.h"

namespace pfgraph {

struct Message;

namespace kernels {

struct EdgeProperty {
  EdgeIndex edge = 0;
  TokenId property = 0;

  friend bool operator==(const EdgeProperty&, const EdgeProperty&) = default;
  friend auto operator<=>(const EdgeProperty&, const EdgeProperty&) = default;
};

DegreeStats ComputeDegreeStats(const OrgGraph& graph);
DegreeStats ComputeDegreeStatsSerial(const OrgGraph& graph);

// For each query, the number of edges in neighborhood(edge) labeled with
// property.
std::vector<std::uint32_t> CountLabeledNeighbors(
    const OrgGraph& graph, const PropertyLabeling& labeling,
    std::span<const EdgeProperty> queries);
std::vector<std::uint32_t> CountLabeledNeighborsSerial(
    const OrgGraph& graph, const PropertyLabeling& labeling,
    std::span<const EdgeProperty> queries);

std::vector<std::vector<std::string>> ExtractNgramsBatch(
    std::span<const Message> messages);
std::vector<std::vector<std::string>> ExtractNgramsBatchSerial(
    std::span<const Message> messages);

// out[i] = values[i] + Laplace(0, scale), the draw for i taken at counter i.
void AddLaplaceNoise(std::span<const double> values, double scale,
                     const NoiseStream& stream, std::span<double> out);
void AddLaplaceNoiseSerial(std::span<const double> values, double scale,
                           const NoiseStream& stream, std::span<double> out);

}  // namespace kernels
}  // namespace pfgraph

#endif  // PFGRAPH_KERNELS_H_
