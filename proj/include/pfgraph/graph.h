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

#ifndef PFGRAPH_GRAPH_H_
#define PFGRAPH_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace pfgraph {

using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// Endpoints of an undirected edge, stored with `a < b`.
struct Edge {
  NodeIndex a = 0;
  NodeIndex b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DegreeStats {
  std::size_t max_degree = 0;        // D_max
  std::size_t max_neighborhood = 0;  // N_max
  std::size_t edge_count = 0;
  std::size_t node_count = 0;
};

// Case-folds an address (ASCII only) and trims surrounding whitespace.
std::string NormalizeNodeId(std::string_view id);

// Immutable simple undirected communication graph.
//
// Nodes are indexed in lexicographic order of their normalized identifiers and
// edges in lexicographic order of their endpoint pairs, so two graphs built from
// the same set of correspondent pairs are identical regardless of input order.
class OrgGraph {
 public:
  using NodePair = std::pair<std::string, std::string>;

  // Deduplicates pairs (either orientation) after normalizing node ids. A pair
  // whose endpoints normalize to the same node is rejected, as is empty input.
  static absl::StatusOr<OrgGraph> Build(std::span<const NodePair> pairs);

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& node_name(NodeIndex n) const { return names_[n]; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::optional<NodeIndex> FindNode(std::string_view id) const;
  std::optional<EdgeIndex> FindEdge(NodeIndex u, NodeIndex v) const;
  std::optional<EdgeIndex> FindEdge(std::string_view u,
                                    std::string_view v) const;

  // Incident edges of a node, ascending.
  std::span<const EdgeIndex> incident(NodeIndex n) const {
    return {incident_.data() + offsets_[n], incident_.data() + offsets_[n + 1]};
  }
  std::size_t degree(NodeIndex n) const {
    return offsets_[n + 1] - offsets_[n];
  }

  // |neighborhood(e)| = deg(a) + deg(b) - 2.
  std::size_t neighborhood_size(EdgeIndex e) const {
    const Edge& ed = edges_[e];
    return degree(ed.a) + degree(ed.b) - 2;
  }

  // Edges sharing at least one endpoint with `e`, excluding `e`, ascending.
  absl::StatusOr<std::vector<EdgeIndex>> Neighborhood(EdgeIndex e) const;

  // Visits every neighbor of `e` exactly once. `e` must be valid.
  template <typename Fn>
  void ForEachNeighbor(EdgeIndex e, Fn&& fn) const {
    const Edge& ed = edges_[e];
    for (EdgeIndex f : incident(ed.a)) {
      if (f != e) fn(f);
    }
    for (EdgeIndex f : incident(ed.b)) {
      if (f != e) fn(f);
    }
  }

  const DegreeStats& stats() const { return stats_; }

  // Endpoint names of every edge, in edge order.
  std::vector<NodePair> EdgePairs() const;

 private:
  OrgGraph() = default;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeIndex> incident_;
  DegreeStats stats_;
};

}  // namespace pfgraph

#endif  // PFGRAPH_GRAPH_H_
