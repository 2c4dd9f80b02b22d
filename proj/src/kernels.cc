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

#include "pfgraph/kernels.h"

#include <algorithm>
#include <cstddef>

#include "pfgraph/ingest.h"

namespace pfgraph::kernels {
namespace {

std::uint32_t CountOne(const OrgGraph& graph, const PropertyLabeling& labeling,
                       const EdgeProperty& q) {
  std::uint32_t w = 0;
  graph.ForEachNeighbor(q.edge, [&](EdgeIndex f) {
    if (labeling.Has(f, q.property)) ++w;
  });
  return w;
}

}  // namespace

DegreeStats ComputeDegreeStats(const OrgGraph& graph) {
  DegreeStats s;
  s.edge_count = graph.edge_count();
  s.node_count = graph.node_count();
  const std::int64_t n = static_cast<std::int64_t>(graph.node_count());
  const std::int64_t m = static_cast<std::int64_t>(graph.edge_count());
  std::size_t max_degree = 0;
  std::size_t max_neighborhood = 0;
#pragma omp parallel for reduction(max : max_degree)
  for (std::int64_t v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, graph.degree(static_cast<NodeIndex>(v)));
  }
#pragma omp parallel for reduction(max : max_neighborhood)
  for (std::int64_t e = 0; e < m; ++e) {
    max_neighborhood = std::max(
        max_neighborhood, graph.neighborhood_size(static_cast<EdgeIndex>(e)));
  }
  s.max_degree = max_degree;
  s.max_neighborhood = max_neighborhood;
  return s;
}

DegreeStats ComputeDegreeStatsSerial(const OrgGraph& graph) {
  DegreeStats s;
  s.edge_count = graph.edge_count();
  s.node_count = graph.node_count();
  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    s.max_degree = std::max(s.max_degree, graph.degree(v));
  }
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    s.max_neighborhood =
        std::max(s.max_neighborhood, graph.neighborhood_size(e));
  }
  return s;
}

std::vector<std::uint32_t> CountLabeledNeighbors(
    const OrgGraph& graph, const PropertyLabeling& labeling,
    std::span<const EdgeProperty> queries) {
  std::vector<std::uint32_t> out(queries.size());
  const std::int64_t n = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = CountOne(graph, labeling, queries[i]);
  }
  return out;
}

std::vector<std::uint32_t> CountLabeledNeighborsSerial(
    const OrgGraph& graph, const PropertyLabeling& labeling,
    std::span<const EdgeProperty> queries) {
  std::vector<std::uint32_t> out;
  out.reserve(queries.size());
  for (const EdgeProperty& q : queries) {
    out.push_back(CountOne(graph, labeling, q));
  }
  return out;
}

std::vector<std::vector<std::string>> ExtractNgramsBatch(
    std::span<const Message> messages) {
  std::vector<std::vector<std::string>> out(messages.size());
  const std::int64_t n = static_cast<std::int64_t>(messages.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = ExtractNgrams(messages[i].body);
  }
  return out;
}

std::vector<std::vector<std::string>> ExtractNgramsBatchSerial(
    std::span<const Message> messages) {
  std::vector<std::vector<std::string>> out;
  out.reserve(messages.size());
  for (const Message& m : messages) out.push_back(ExtractNgrams(m.body));
  return out;
}

void AddLaplaceNoise(std::span<const double> values, double scale,
                     const NoiseStream& stream, std::span<double> out) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = values[i] +
             LaplaceInverseCdf(stream.Uniform(static_cast<std::uint64_t>(i)),
                               scale);
  }
}

void AddLaplaceNoiseSerial(std::span<const double> values, double scale,
                           const NoiseStream& stream, std::span<double> out) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = values[i] + LaplaceInverseCdf(stream.Uniform(i), scale);
  }
}

}  // namespace pfgraph::kernels
