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

#include "pfgraph/labeling.h"

#include <string>
#include <span>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace pfgraph {
namespace {

template <typename T>
std::vector<T> AsVector(std::span<const T> s) {
  return {s.begin(), s.end()};
}

using ::testing::ElementsAre;

TEST(LabelingTest, FromStringsBuildsBothDirections) {
  auto l = PropertyLabeling::FromStrings(
      3, {{"x", "y"}, {"y"}, {}}, {"z"});
  ASSERT_TRUE(l.ok()) << l.status();
  EXPECT_THAT(l->vocabulary(), ElementsAre("x", "y", "z"));
  EXPECT_EQ(l->freq(*l->FindToken("y")), 2u);
  EXPECT_EQ(l->freq(*l->FindToken("z")), 0u);
  EXPECT_THAT(AsVector(l->edges_with(*l->FindToken("y"))), ElementsAre(0, 1));
  EXPECT_TRUE(l->Has(0, 0));
  EXPECT_FALSE(l->Has(2, 0));
  EXPECT_EQ(l->label_count(), 3u);
}

TEST(LabelingTest, RejectsSetsOverCap) {
  EXPECT_FALSE(PropertyLabeling::FromStrings(1, {{"a", "b"}}).ok());
  EXPECT_FALSE(PropertyLabeling::Create(0, {}, {{}}).ok());
}

TEST(LabelingTest, RejectsUnsortedVocabularyAndBadIds) {
  EXPECT_FALSE(PropertyLabeling::Create(2, {"b", "a"}, {{0}}).ok());
  EXPECT_FALSE(PropertyLabeling::Create(2, {"a"}, {{3}}).ok());
}

TEST(LabelingTest, DuplicateTokensCollapse) {
  auto l = PropertyLabeling::Create(2, {"a", "b"}, {{1, 1, 0}});
  ASSERT_TRUE(l.ok());
  EXPECT_THAT(AsVector(l->tokens(0)), ElementsAre(0, 1));
}

TEST(LabelingTest, WithVocabularyKeepsLabels) {
  auto l = PropertyLabeling::FromStrings(2, {{"m"}, {"k", "m"}});
  ASSERT_TRUE(l.ok());
  auto wide = l->WithVocabulary({"a", "m", "z"});
  ASSERT_TRUE(wide.ok());
  EXPECT_THAT(wide->vocabulary(), ElementsAre("a", "k", "m", "z"));
  EXPECT_EQ(wide->freq(*wide->FindToken("m")), 2u);
  EXPECT_EQ(wide->freq(*wide->FindToken("a")), 0u);
  EXPECT_EQ(wide->cap(), 2u);
}

}  // namespace
}  // namespace pfgraph
