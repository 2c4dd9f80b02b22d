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

#include <omp.h>

#include <cstring>
#include <vector>

#include "gtest/gtest.h"
#include "pfgraph/correlation.h"
#include "pfgraph/ingest.h"
#include "pfgraph/synthetic.h"

namespace pfgraph::kernels {
namespace {

const SyntheticCorpus& Corpus() {
  static const SyntheticCorpus* c = [] {
    SyntheticSpec s;
    s.node_count = 150;
    s.list_sizes = {40, 30};
    s.vocabulary_size = 80;
    auto r = GenerateSynthetic(s);
    EXPECT_TRUE(r.ok());
    return new SyntheticCorpus(*std::move(r));
  }();
  return *c;
}

bool BitEqual(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

TEST(KernelsTest, RunsWithSeveralThreads) {
  omp_set_num_threads(4);
  EXPECT_GE(omp_get_max_threads(), 2);
}

TEST(KernelsTest, DegreeStatsMatchSerial) {
  const auto& c = Corpus();
  DegreeStats p = ComputeDegreeStats(c.graph);
  DegreeStats s = ComputeDegreeStatsSerial(c.graph);
  EXPECT_EQ(p.max_degree, s.max_degree);
  EXPECT_EQ(p.max_neighborhood, s.max_neighborhood);
  EXPECT_EQ(p.edge_count, s.edge_count);
  EXPECT_EQ(p.node_count, s.node_count);
  EXPECT_EQ(p.max_neighborhood, c.graph.stats().max_neighborhood);
}

TEST(KernelsTest, LabeledNeighborCountsMatchSerialAndDirectCount) {
  const auto& c = Corpus();
  std::vector<EdgeProperty> q;
  for (EdgeIndex e = 0; e < c.graph.edge_count(); e += 3) {
    for (TokenId t = 0; t < 10; ++t) q.push_back({e, t});
  }
  auto par = CountLabeledNeighbors(c.graph, c.labeling, q);
  auto ser = CountLabeledNeighborsSerial(c.graph, c.labeling, q);
  EXPECT_EQ(par, ser);
  for (std::size_t i = 0; i < q.size(); i += 97) {
    EXPECT_EQ(par[i],
              NeighborhoodCount(c.graph, c.labeling, q[i].edge, q[i].property));
  }
}

TEST(KernelsTest, NgramBatchMatchesSerial) {
  const auto& c = Corpus();
  EXPECT_EQ(ExtractNgramsBatch(c.messages), ExtractNgramsBatchSerial(c.messages));
}

TEST(KernelsTest, LaplaceNoiseBitIdentical) {
  std::vector<double> v(100000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = double(i % 17);
  NoiseStream stream(42, "kernel", 3);
  std::vector<double> a(v.size()), b(v.size());
  AddLaplaceNoise(v, 2.5, stream, a);
  AddLaplaceNoiseSerial(v, 2.5, stream, b);
  EXPECT_TRUE(BitEqual(a, b));
  omp_set_num_threads(1);
  std::vector<double> one(v.size());
  AddLaplaceNoise(v, 2.5, stream, one);
  omp_set_num_threads(4);
  EXPECT_TRUE(BitEqual(a, one));
}

}  // namespace
}  // namespace pfgraph::kernels
