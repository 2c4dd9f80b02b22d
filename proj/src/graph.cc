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

#include "pfgraph/graph.h"

#include <algorithm>
#include <cctype>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pfgraph/kernels.h"

namespace pfgraph {

std::string NormalizeNodeId(std::string_view id) {
  std::size_t begin = 0;
  std::size_t end = id.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(id[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(id[end - 1]))) {
    --end;
  }
  std::string out(id.substr(begin, end - begin));
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

absl::StatusOr<OrgGraph> OrgGraph::Build(std::span<const NodePair> pairs) {
  if (pairs.empty()) {
    return absl::InvalidArgumentError("empty graph: no node pairs given");
  }
  std::vector<std::pair<std::string, std::string>> normalized;
  normalized.reserve(pairs.size());
  std::vector<std::string> names;
  names.reserve(2 * pairs.size());
  for (const auto& [u, v] : pairs) {
    std::string a = NormalizeNodeId(u);
    std::string b = NormalizeNodeId(v);
    if (a.empty() || b.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("rejected pair (", u, ", ", v, "): empty node id"));
    }
    if (a == b) {
      return absl::InvalidArgumentError(
          absl::StrCat("rejected pair (", u, ", ", v, "): self-loop"));
    }
    names.push_back(a);
    names.push_back(b);
    normalized.emplace_back(std::move(a), std::move(b));
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  auto index_of = [&names](const std::string& s) {
    return static_cast<NodeIndex>(
        std::lower_bound(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(normalized.size());
  for (const auto& [a, b] : normalized) {
    NodeIndex x = index_of(a);
    NodeIndex y = index_of(b);
    edges.push_back(Edge{std::min(x, y), std::max(x, y)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  OrgGraph g;
  g.names_ = std::move(names);
  g.edges_ = std::move(edges);

  // CSR adjacency. Edges are visited in ascending order, so each incident list
  // comes out sorted.
  const std::size_t n = g.names_.size();
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.a + 1];
    ++g.offsets_[e.b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.incident_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeIndex i = 0; i < g.edges_.size(); ++i) {
    g.incident_[cursor[g.edges_[i].a]++] = i;
    g.incident_[cursor[g.edges_[i].b]++] = i;
  }

  g.stats_ = kernels::ComputeDegreeStats(g);
  return g;
}

std::optional<NodeIndex> OrgGraph::FindNode(std::string_view id) const {
  const std::string key = NormalizeNodeId(id);
  auto it = std::lower_bound(names_.begin(), names_.end(), key);
  if (it == names_.end() || *it != key) return std::nullopt;
  return static_cast<NodeIndex>(it - names_.begin());
}

std::optional<EdgeIndex> OrgGraph::FindEdge(NodeIndex u, NodeIndex v) const {
  if (u >= names_.size() || v >= names_.size() || u == v) return std::nullopt;
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::optional<EdgeIndex> OrgGraph::FindEdge(std::string_view u,
                                            std::string_view v) const {
  auto a = FindNode(u);
  auto b = FindNode(v);
  if (!a || !b) return std::nullopt;
  return FindEdge(*a, *b);
}

absl::StatusOr<std::vector<EdgeIndex>> OrgGraph::Neighborhood(
    EdgeIndex e) const {
  if (e >= edges_.size()) {
    return absl::NotFoundError(absl::StrCat("unknown edge index ", e));
  }
  std::vector<EdgeIndex> out;
  out.reserve(neighborhood_size(e));
  ForEachNeighbor(e, [&out](EdgeIndex f) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrgGraph::NodePair> OrgGraph::EdgePairs() const {
  std::vector<NodePair> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(names_[e.a], names_[e.b]);
  return out;
}

}  // namespace pfgraph
