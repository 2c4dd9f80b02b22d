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

#include "pfgraph/attack.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "pfgraph/synthetic.h"

namespace pfgraph {
namespace {

SyntheticCorpus Corpus() {
  SyntheticSpec s;
  s.node_count = 60;
  s.list_sizes = {20};
  s.vocabulary_size = 20;
  s.seed_probability = 0.05;
  s.propagation = 0.5;
  s.seed = 9;
  auto c = GenerateSynthetic(s);
  EXPECT_TRUE(c.ok()) << c.status();
  return *std::move(c);
}

double BinomialPmf(std::size_t n, double p, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) c = c * double(n - i) / double(i + 1);
  return c * std::pow(p, double(k)) * std::pow(1 - p, double(n - k));
}

TEST(AucTest, HandExamples) {
  EXPECT_DOUBLE_EQ(Auc(std::vector<double>{0.1, 0.9}, {false, true}), 1.0);
  EXPECT_DOUBLE_EQ(Auc(std::vector<double>{0.9, 0.1}, {false, true}), 0.0);
  EXPECT_DOUBLE_EQ(Auc(std::vector<double>{0.5, 0.5}, {false, true}), 0.5);
  EXPECT_DOUBLE_EQ(
      Auc(std::vector<double>{0.1, 0.4, 0.35, 0.8}, {false, false, true, true}),
      0.75);
  EXPECT_DOUBLE_EQ(Auc(std::vector<double>{0.1, 0.2}, {true, true}), 0.5);
}

TEST(SampleTargetsTest, DistinctSortedAndSeeded) {
  auto c = Corpus();
  auto t = SampleTargets(c.graph, 10, 3);
  ASSERT_EQ(t.size(), 10u);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_LT(t[i - 1], t[i]);
  EXPECT_EQ(t, SampleTargets(c.graph, 10, 3));
  EXPECT_NE(t, SampleTargets(c.graph, 10, 4));
  EXPECT_EQ(SampleTargets(c.graph, 1 << 20, 0).size(), c.graph.edge_count());
}

TEST(AttackTest, UninformativeModelGivesPriorAndChanceAuc) {
  auto c = Corpus();
  BinomialModel m;
  m.p0 = m.p1 = 0.2;
  auto targets = SampleTargets(c.graph, 200, 1);
  auto r = EvaluateAttack(c.graph, c.labeling, m, 0, targets);
  ASSERT_TRUE(r.ok()) << r.status();
  for (double p : r->posterior) EXPECT_NEAR(p, r->prior, 1e-12);
  EXPECT_DOUBLE_EQ(r->auc, 0.5);
}

TEST(AttackTest, MatchesBruteForceBayes) {
  auto c = Corpus();
  BinomialModel m;
  m.p0 = 0.05;
  m.p1 = 0.4;
  TokenId prop = 0;
  auto targets = SampleTargets(c.graph, 20, 2);
  auto r = EvaluateAttack(c.graph, c.labeling, m, prop, targets);
  ASSERT_TRUE(r.ok());
  const double prior =
      double(c.labeling.freq(prop)) / double(c.graph.edge_count());
  EXPECT_DOUBLE_EQ(r->prior, prior);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    EdgeIndex e = targets[i];
    std::size_t deg = 0, w = 0;
    for (EdgeIndex f = 0; f < c.graph.edge_count(); ++f) {
      if (f == e) continue;
      const Edge& a = c.graph.edge(e);
      const Edge& b = c.graph.edge(f);
      if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) {
        ++deg;
        if (c.labeling.Has(f, prop)) ++w;
      }
    }
    double j1 = prior * BinomialPmf(deg, 0.4, w);
    double j0 = (1 - prior) * BinomialPmf(deg, 0.05, w);
    EXPECT_NEAR(r->posterior[i], j1 / (j1 + j0), 1e-9) << "edge " << e;
    EXPECT_EQ(r->truth[i], c.labeling.Has(e, prop));
  }
}

TEST(AttackTest, ReleaseLikelihoodMatchesBruteForce) {
  auto c = Corpus();
  BinomialModel m;
  m.p0 = 0.05;
  m.p1 = 0.4;
  auto targets = SampleTargets(c.graph, 15, 5);
  const double freq = double(c.labeling.freq(0));
  ReleasedCount release{freq + 0.03, 0.05};
  auto r = EvaluateAttack(c.graph, c.labeling, m, 0, targets, release);
  ASSERT_TRUE(r.ok());
  ASSERT_TRUE(r->auc_with_release.has_value());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double others = freq - (r->truth[i] ? 1 : 0);
    // Pr(release | state) ratio times the neighborhood-only odds.
    double lap1 = std::exp(-std::abs(release.value - others - 1) / release.lambda);
    double lap0 = std::exp(-std::abs(release.value - others) / release.lambda);
    double odds = r->posterior[i] / (1 - r->posterior[i]) * lap1 / lap0;
    EXPECT_NEAR(r->posterior_with_release[i], odds / (1 + odds), 1e-9);
  }
  // A nearly exact count pins the secret down.
  EXPECT_GT(*r->auc_with_release, 0.99);
}

TEST(AttackTest, Errors) {
  auto c = Corpus();
  BinomialModel m;
  std::vector<EdgeIndex> bad = {EdgeIndex(c.graph.edge_count())};
  EXPECT_EQ(EvaluateAttack(c.graph, c.labeling, m, 0, bad).status().code(),
            absl::StatusCode::kNotFound);
  std::vector<EdgeIndex> ok = {0};
  EXPECT_FALSE(EvaluateAttack(c.graph, c.labeling, m,
                              TokenId(c.labeling.vocabulary_size()), ok)
                   .ok());
  EXPECT_FALSE(
      EvaluateAttack(c.graph, c.labeling, m, 0, ok, ReleasedCount{1, 0}).ok());
}

TEST(LikelihoodTest, GlobalAndConditionalLookups) {
  GlobalModel g{*DiscreteDistribution::Create({0, 2}, {0.75, 0.25}),
                *DiscreteDistribution::Create({2}, {1.0})};
  EXPECT_DOUBLE_EQ(
      NeighborhoodLikelihood(g, SecretState::kAbsent, 2, 10, 5), 0.25);
  EXPECT_DOUBLE_EQ(
      NeighborhoodLikelihood(g, SecretState::kPresent, 1, 10, 5), 0.0);
  ConditionalModel cm;
  cm.fraction_bins = 10;
  ConditionalModel::Bucket b;
  b.by_state[1] = *DiscreteDistribution::Create({5}, {1.0});
  b.by_state[0] = *DiscreteDistribution::Create({0}, {1.0});
  cm.buckets[{0, 1}] = b;
  // w/deg = 6/12 lands in bin 5 of 10.
  EXPECT_DOUBLE_EQ(
      NeighborhoodLikelihood(cm, SecretState::kPresent, 6, 12, 3), 1.0);
  EXPECT_DOUBLE_EQ(
      NeighborhoodLikelihood(cm, SecretState::kAbsent, 6, 12, 3), 0.0);
}

}  // namespace
}  // namespace pfgraph
