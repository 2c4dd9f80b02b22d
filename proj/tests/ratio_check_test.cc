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

#include "pfgraph/ratio_check.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"

namespace pfgraph {
namespace {

OrgGraph Build(std::vector<OrgGraph::NodePair> pairs) {
  auto g = OrgGraph::Build(pairs);
  EXPECT_TRUE(g.ok());
  return *std::move(g);
}

OrgGraph Path4() { return Build({{"a", "b"}, {"b", "c"}, {"c", "d"}}); }

OrgGraph Star4() {
  return Build({{"hub", "a"}, {"hub", "b"}, {"hub", "c"}, {"hub", "d"}});
}

TEST(JointModelTest, ProbabilitiesSumToOne) {
  auto m = PlantedJointModel(Star4(), 0.2, 0.5);
  ASSERT_TRUE(m.ok()) << m.status();
  EXPECT_EQ(m->edge_count, 4u);
  ASSERT_EQ(m->probability.size(), 16u);
  EXPECT_NEAR(std::accumulate(m->probability.begin(), m->probability.end(),
                              0.0),
              1.0, 1e-12);
}

TEST(JointModelTest, NoPropagationIsIndependent) {
  auto planted = PlantedJointModel(Path4(), 0.3, 0.0);
  auto indep = IndependentJointModel(Path4(), 0.3);
  ASSERT_TRUE(planted.ok() && indep.ok());
  for (std::size_t x = 0; x < 8; ++x) {
    EXPECT_NEAR(planted->probability[x], indep->probability[x], 1e-15);
  }
}

TEST(JointModelTest, SingleEdgeHandComputed) {
  auto m = PlantedJointModel(Build({{"a", "b"}}), 0.25, 0.9);
  ASSERT_TRUE(m.ok());
  EXPECT_NEAR(m->probability[0], 0.75, 1e-15);
  EXPECT_NEAR(m->probability[1], 0.25, 1e-15);
}

TEST(JointModelTest, TwoAdjacentEdgesHandComputed) {
  // Labeled iff seeded, or the other edge is seeded and propagates.
  const double p = 0.2, q = 0.5;
  auto m = PlantedJointModel(Build({{"a", "b"}, {"b", "c"}}), p, q);
  ASSERT_TRUE(m.ok());
  double none = (1 - p) * (1 - p);
  double only_first = p * (1 - p) * (1 - q);
  double both = p * p + 2 * p * (1 - p) * q;
  EXPECT_NEAR(m->probability[0], none, 1e-15);
  EXPECT_NEAR(m->probability[1], only_first, 1e-15);
  EXPECT_NEAR(m->probability[2], only_first, 1e-15);
  EXPECT_NEAR(m->probability[3], both, 1e-15);
}

TEST(JointModelTest, RejectsLargeGraphsAndBadProbabilities) {
  auto big = Build({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"a", "e"},
                    {"a", "f"}, {"a", "g"}});
  EXPECT_FALSE(PlantedJointModel(big, 0.1, 0.1).ok());
  EXPECT_FALSE(IndependentJointModel(Path4(), 1.5).ok());
}

TEST(ExactWTest, IndependentLabelsShiftByOne) {
  auto m = IndependentJointModel(Star4(), 0.3);
  EXPECT_NEAR(*ExactPufferfishW(*m), 1.0, 1e-12);
}

TEST(ExactWTest, PropagationRaisesW) {
  auto low = PlantedJointModel(Star4(), 0.1, 0.0);
  auto high = PlantedJointModel(Star4(), 0.1, 0.9);
  double w_low = *ExactPufferfishW(*low);
  double w_high = *ExactPufferfishW(*high);
  EXPECT_GT(w_high, w_low);
  EXPECT_LE(w_high, 4.0);
}

TEST(ExactWTest, ImpossibleSecretIsAnError) {
  auto m = IndependentJointModel(Path4(), 0.0);
  EXPECT_EQ(ExactPufferfishW(*m).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(RatioCheckTest, CalibratedNoiseStaysWithinEpsilon) {
  for (double q : {0.0, 0.4, 0.9}) {
    auto m = PlantedJointModel(Star4(), 0.15, q);
    ASSERT_TRUE(m.ok());
    double w = *ExactPufferfishW(*m);
    for (double eps : {0.5, 1.0, 2.0}) {
      auto r = PufferfishRatioCheck(*m, w / eps);
      ASSERT_TRUE(r.ok()) << r.status();
      EXPECT_LE(r->max_log_ratio, eps + 1e-9) << "q=" << q << " eps=" << eps;
      EXPECT_GT(r->bins, 0u);
    }
  }
}

TEST(RatioCheckTest, HalfScaleNoiseExceedsEpsilon) {
  auto m = PlantedJointModel(Star4(), 0.15, 0.9);
  double w = *ExactPufferfishW(*m);
  auto r = PufferfishRatioCheck(*m, 0.5 * w);
  ASSERT_TRUE(r.ok());
  EXPECT_GT(r->max_log_ratio, 1.0);
}

TEST(RatioCheckTest, BinWidthIsTenthOfScale) {
  auto m = IndependentJointModel(Path4(), 0.5);
  auto r = PufferfishRatioCheck(*m, 2.0);
  ASSERT_TRUE(r.ok());
  EXPECT_DOUBLE_EQ(r->bin_width, 0.2);
  EXPECT_FALSE(PufferfishRatioCheck(*m, 0.0).ok());
}

}  // namespace
}  // namespace pfgraph
