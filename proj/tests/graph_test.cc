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
#include <random>
#include <set>
#include <string>
#include <span>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "pfgraph/kernels.h"

namespace pfgraph {
namespace {

template <typename T>
std::vector<T> AsVector(std::span<const T> s) {
  return {s.begin(), s.end()};
}

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::UnorderedElementsAreArray;

OrgGraph MustBuild(std::vector<OrgGraph::NodePair> pairs) {
  auto g = OrgGraph::Build(pairs);
  EXPECT_TRUE(g.ok()) << g.status();
  return *std::move(g);
}

// Edges named by their two single-digit endpoints, e.g. "23".
OrgGraph DigitGraph(const std::vector<std::string>& names) {
  std::vector<OrgGraph::NodePair> pairs;
  for (const auto& n : names) pairs.emplace_back(n.substr(0, 1), n.substr(1, 1));
  return MustBuild(pairs);
}

std::set<std::string> NeighborNames(const OrgGraph& g, std::string_view u,
                                    std::string_view v) {
  auto e = g.FindEdge(u, v);
  EXPECT_TRUE(e.has_value());
  auto nb = g.Neighborhood(*e);
  EXPECT_TRUE(nb.ok());
  std::set<std::string> out;
  for (EdgeIndex f : *nb) {
    const Edge& ed = g.edge(f);
    std::string a = g.node_name(ed.a), b = g.node_name(ed.b);
    out.insert(a > b ? a + b : b + a);
  }
  return out;
}

TEST(GraphTest, DeduplicatesBothOrientations) {
  OrgGraph g = MustBuild({{"A", "B"}, {"B", "A"}, {"B", "C"}});
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.stats().max_degree, 2u);
}

TEST(GraphTest, NormalizesCaseAndWhitespace) {
  OrgGraph g = MustBuild({{" Alice@X.org", "bob@x.org"}, {"alice@x.org ", "BOB@x.org"}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.FindNode("ALICE@x.org").has_value());
}

TEST(GraphTest, RejectsSelfLoopNamingPair) {
  auto g = OrgGraph::Build(std::vector<OrgGraph::NodePair>{{"a", "b"}, {"c", "C"}});
  ASSERT_FALSE(g.ok());
  EXPECT_THAT(std::string(g.status().message()), HasSubstr("c"));
}

TEST(GraphTest, RejectsEmptyInput) {
  EXPECT_FALSE(OrgGraph::Build(std::vector<OrgGraph::NodePair>{}).ok());
}

TEST(GraphTest, FigureTwoNeighborhoods) {
  OrgGraph g = DigitGraph({"21", "23", "24", "31", "34", "57", "51", "56",
                           "58", "59", "76"});
  EXPECT_EQ(NeighborNames(g, "2", "3"),
            (std::set<std::string>{"21", "42", "31", "43"}));
  EXPECT_EQ(NeighborNames(g, "5", "7"),
            (std::set<std::string>{"51", "65", "85", "95", "76"}));
  EXPECT_EQ(g.neighborhood_size(*g.FindEdge("2", "3")), 4u);
  EXPECT_EQ(g.neighborhood_size(*g.FindEdge("5", "7")), 5u);
}

TEST(GraphTest, PathNeighborhood) {
  OrgGraph g = MustBuild({{"A", "B"}, {"B", "C"}});
  EXPECT_EQ(NeighborNames(g, "a", "b"), (std::set<std::string>{"cb"}));
}

TEST(GraphTest, StarStats) {
  std::vector<OrgGraph::NodePair> pairs;
  for (int i = 1; i <= 5; ++i) pairs.emplace_back("s", "l" + std::to_string(i));
  OrgGraph g = MustBuild(pairs);
  EXPECT_EQ(g.stats().max_degree, 5u);
  EXPECT_EQ(g.stats().max_neighborhood, 4u);
  EXPECT_LE(g.stats().max_neighborhood, 2 * g.stats().max_degree - 1);
}

TEST(GraphTest, TriangleNeighborhoodMatchesIncidentScan) {
  OrgGraph g = MustBuild({{"A", "B"}, {"B", "C"}, {"A", "C"}});
  EXPECT_EQ(NeighborNames(g, "a", "b"), (std::set<std::string>{"ca", "cb"}));
}

TEST(GraphTest, DisjointEdgesHaveEmptyNeighborhoods) {
  OrgGraph g = MustBuild({{"a", "b"}, {"c", "d"}});
  EXPECT_EQ(g.stats().max_neighborhood, 0u);
}

TEST(GraphTest, UnknownEdgeIsLookupError) {
  OrgGraph g = MustBuild({{"a", "b"}});
  EXPECT_EQ(g.Neighborhood(7).status().code(), absl::StatusCode::kNotFound);
  EXPECT_FALSE(g.FindEdge("a", "zz").has_value());
}

// Random graphs: neighborhoods against a brute-force scan of the edge list,
// symmetry, the degree bound and rebuild idempotence.
TEST(GraphTest, RandomGraphProperties) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    std::vector<OrgGraph::NodePair> pairs;
    const int nodes = 3 + round;
    for (int k = 0; k < 4 * nodes; ++k) {
      int u = rng() % nodes, v = rng() % nodes;
      if (u == v) continue;
      pairs.emplace_back("n" + std::to_string(u), "n" + std::to_string(v));
    }
    if (pairs.empty()) continue;
    OrgGraph g = MustBuild(pairs);
    std::size_t n_max = 0;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      std::vector<EdgeIndex> brute;
      const Edge& a = g.edge(e);
      for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
        const Edge& b = g.edge(f);
        if (f != e && (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b)) {
          brute.push_back(f);
        }
      }
      auto nb = g.Neighborhood(e);
      ASSERT_TRUE(nb.ok());
      EXPECT_EQ(*nb, brute);
      EXPECT_EQ(nb->size(), g.neighborhood_size(e));
      for (EdgeIndex f : *nb) {
        auto back = g.Neighborhood(f);
        EXPECT_TRUE(std::binary_search(back->begin(), back->end(), e));
      }
      n_max = std::max(n_max, brute.size());
    }
    EXPECT_EQ(g.stats().max_neighborhood, n_max);
    EXPECT_LE(n_max, 2 * g.stats().max_degree - 1);
    EXPECT_EQ(kernels::ComputeDegreeStatsSerial(g).max_neighborhood, n_max);

    OrgGraph again = MustBuild(g.EdgePairs());
    EXPECT_EQ(again.EdgePairs(), g.EdgePairs());
  }
}

TEST(GraphTest, InputOrderDoesNotMatter) {
  std::vector<OrgGraph::NodePair> pairs = {
      {"d", "a"}, {"b", "c"}, {"a", "b"}, {"c", "d"}, {"a", "c"}};
  OrgGraph g1 = MustBuild(pairs);
  std::reverse(pairs.begin(), pairs.end());
  for (auto& p : pairs) std::swap(p.first, p.second);
  OrgGraph g2 = MustBuild(pairs);
  EXPECT_EQ(g1.EdgePairs(), g2.EdgePairs());
  EXPECT_THAT(AsVector(g1.incident(*g1.FindNode("a"))), ElementsAre(0, 1, 2));
}

}  // namespace
}  // namespace pfgraph
