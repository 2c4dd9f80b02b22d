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

#include "pfgraph/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "pfgraph/rng.h"

namespace pfgraph {
namespace {

SensitivitySource Source() {
  SensitivitySource s;
  s.stats.max_degree = 942;
  s.stats.max_neighborhood = 1883;
  s.conditional_w = 960.33;
  s.global_w = 43.0;
  s.binomial_w = 558.0;
  return s;
}

MechanismConfig Config(PrivacyMode mode) {
  MechanismConfig c;
  c.mode = mode;
  c.cap = 1000;
  c.epsilon = 100.0;
  return c;
}

TEST(ModeTest, NamesRoundTrip) {
  for (PrivacyMode m : kAllPrivacyModes) {
    EXPECT_EQ(*ParsePrivacyMode(PrivacyModeName(m)), m);
  }
  EXPECT_FALSE(ParsePrivacyMode("gaussian").ok());
}

TEST(ConfigTest, Validate) {
  MechanismConfig c;
  EXPECT_TRUE(c.Validate().ok());
  c.epsilon = 0.0;
  EXPECT_FALSE(c.Validate().ok());
  c.epsilon = INFINITY;
  EXPECT_FALSE(c.Validate().ok());
  c.epsilon = 1.0;
  c.delta = 1.0;
  EXPECT_FALSE(c.Validate().ok());
  c.delta = -0.1;
  EXPECT_FALSE(c.Validate().ok());
  c.delta = 0.0;
  c.cap = 0;
  EXPECT_FALSE(c.Validate().ok());
}

TEST(CalibrateTest, ReferenceScales) {
  auto s = Source();
  EXPECT_DOUBLE_EQ(Calibrate(Config(PrivacyMode::kEdge), s)->lambda, 10.0);
  EXPECT_DOUBLE_EQ(Calibrate(Config(PrivacyMode::kNode), s)->lambda, 10.0);
  EXPECT_DOUBLE_EQ(Calibrate(Config(PrivacyMode::kBinomial), s)->lambda,
                   5580.0);
  EXPECT_DOUBLE_EQ(Calibrate(Config(PrivacyMode::kGroup), s)->lambda, 18830.0);
  EXPECT_NEAR(Calibrate(Config(PrivacyMode::kConditional), s)->lambda, 9603.3,
              1e-6);
  EXPECT_DOUBLE_EQ(Calibrate(Config(PrivacyMode::kGlobal), s)->lambda, 430.0);
}

TEST(CalibrateTest, RecordsInputs) {
  auto n = Calibrate(Config(PrivacyMode::kGroup), Source());
  ASSERT_TRUE(n.ok());
  EXPECT_EQ(n->w, 1883.0);
  EXPECT_EQ(n->cap, 1000u);
  EXPECT_EQ(n->ToJson()["mode"], "group");
  EXPECT_EQ(n->ToJson()["W"], 1883.0);
}

TEST(CalibrateTest, MissingReportIsFailedPrecondition) {
  SensitivitySource s;
  s.stats.max_degree = 3;
  auto n = Calibrate(Config(PrivacyMode::kConditional), s);
  EXPECT_EQ(n.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(Calibrate(Config(PrivacyMode::kGroup), SensitivitySource{})
                .status()
                .code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(CalibrateTest, ZeroWIsRejected) {
  auto s = Source();
  s.global_w = 0.0;
  EXPECT_FALSE(Calibrate(Config(PrivacyMode::kGlobal), s).ok());
}

TEST(CalibrateTest, MonotoneInInputs) {
  auto s = Source();
  double prev = 0.0;
  for (double w : {1.0, 2.0, 10.0, 500.0}) {
    s.global_w = w;
    double l = Calibrate(Config(PrivacyMode::kGlobal), s)->lambda;
    EXPECT_GT(l, prev);
    prev = l;
  }
  auto c = Config(PrivacyMode::kEdge);
  double l1 = Calibrate(c, s)->lambda;
  c.epsilon *= 2;
  EXPECT_LT(Calibrate(c, s)->lambda, l1);
  c.cap *= 4;
  EXPECT_GT(Calibrate(c, s)->lambda, l1);
}

TEST(LaplaceTest, MomentsAndKolmogorovSmirnov) {
  constexpr int kN = 20000;
  constexpr double kScale = 3.0;
  NoiseStream stream(7, "laplace-test", 0);
  std::vector<double> x(kN);
  double sum = 0, sq = 0, abs_sum = 0;
  for (int i = 0; i < kN; ++i) {
    x[i] = *LaplaceSample(kScale, stream, i);
    sum += x[i];
    sq += x[i] * x[i];
    abs_sum += std::abs(x[i]);
  }
  double mean = sum / kN;
  EXPECT_NEAR(mean, 0.0, 0.1);
  EXPECT_NEAR(std::sqrt(sq / kN - mean * mean), std::sqrt(2.0) * kScale, 0.1);
  EXPECT_NEAR(abs_sum / kN, kScale, 0.1);
  std::sort(x.begin(), x.end());
  double d = 0;
  for (int i = 0; i < kN; ++i) {
    double f = LaplaceCdf(x[i], kScale);
    d = std::max({d, std::abs(f - double(i) / kN),
                  std::abs(f - double(i + 1) / kN)});
  }
  EXPECT_LT(d, 1.63 / std::sqrt(double(kN)));
}

TEST(LaplaceTest, DeterministicPerCounter) {
  NoiseStream a(1, "x", 2), b(1, "x", 2), c(1, "x", 3);
  EXPECT_EQ(*LaplaceSample(1.0, a, 5), *LaplaceSample(1.0, b, 5));
  EXPECT_NE(*LaplaceSample(1.0, a, 5), *LaplaceSample(1.0, c, 5));
  EXPECT_FALSE(LaplaceSample(0.0, a, 0).ok());
}

TEST(GroupBudgetTest, DividesEpsilon) {
  EXPECT_DOUBLE_EQ(*GroupBudget(1.0, 4), 0.25);
  EXPECT_FALSE(GroupBudget(1.0, 0).ok());
  EXPECT_FALSE(GroupBudget(-1.0, 2).ok());
}

TEST(MarkovQuiltTest, ScaleAndErrors) {
  EXPECT_DOUBLE_EQ(*MarkovQuiltScale(1.0, 1883, 100.0, 0.0), 18.83);
  EXPECT_DOUBLE_EQ(*MarkovQuiltScale(2.0, 10, 1.0, 0.5), 40.0);
  EXPECT_FALSE(MarkovQuiltScale(1.0, 10, 1.0, 1.0).ok());
  EXPECT_FALSE(MarkovQuiltScale(0.0, 10, 1.0, 0.0).ok());
  EXPECT_FALSE(MarkovQuiltScale(1.0, 0, 1.0, 0.0).ok());
}

TEST(TrivialQuiltTest, TwiceMaxDegreeMinusOne) {
  DegreeStats s;
  s.max_degree = 942;
  EXPECT_EQ(TrivialQuiltCardinality(s), 1883u);
  s.max_degree = 0;
  EXPECT_EQ(TrivialQuiltCardinality(s), 0u);
}

}  // namespace
}  // namespace pfgraph
