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

#include "pfgraph/ingest.h"

#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace pfgraph {
namespace {

using ::testing::ElementsAre;
using ::testing::ElementsAreArray;
using ::testing::HasSubstr;
using ::testing::UnorderedElementsAre;

Message Msg(std::string id, std::string from, std::vector<std::string> to,
            std::string body = "") {
  return Message{std::move(id), std::move(from), std::move(to), std::move(body)};
}

TEST(ExtractNgramsTest, SentenceExample) {
  EXPECT_THAT(ExtractNgrams("The acquisition closed."),
              ElementsAre("the", "acquisition", "closed", "the acquisition",
                          "acquisition closed"));
}

TEST(ExtractNgramsTest, EmptyBody) { EXPECT_TRUE(ExtractNgrams("").empty()); }

TEST(ExtractNgramsTest, PunctuationOnlyWordsVanish) {
  EXPECT_THAT(ExtractNgrams("-- ok !!"), ElementsAre("ok"));
}

// Frozen from tests/oracles/tokenize_reference.py.
TEST(ExtractNgramsTest, MatchesReferenceTokenizer) {
  const std::string fixture =
      "Re: Q3 \xe2\x80\x9c" "Forecast\xe2\x80\x9d \xe2\x80\x94 the acquisition "
      "(Project Falcon) closed!\n\nThanks,\tJ.  R\xc3\xa9sum\xc3\xa9 "
      "attached... \xc2\xbfQu\xc3\xa9? CAF\xc3\x89 3.5% growth; see--below";
  const std::vector<std::string> expected = {
      "re", "q3", "forecast", "the", "acquisition", "project", "falcon",
      "closed", "thanks", "j", "r\xc3\xa9sum\xc3\xa9", "attached",
      "qu\xc3\xa9", "caf\xc3\x89", "3.5", "growth", "see--below",
      "re q3", "q3 forecast", "forecast the", "the acquisition",
      "acquisition project", "project falcon", "falcon closed",
      "closed thanks", "thanks j", "j r\xc3\xa9sum\xc3\xa9",
      "r\xc3\xa9sum\xc3\xa9 attached", "attached qu\xc3\xa9",
      "qu\xc3\xa9 caf\xc3\x89", "caf\xc3\x89 3.5", "3.5 growth",
      "growth see--below"};
  EXPECT_THAT(ExtractNgrams(fixture), ElementsAreArray(expected));
}

TEST(ExpandListsTest, ExplicitTable) {
  ListTable table = {{"l@x", {"a@x", "b@x"}}};
  auto out = ExpandLists({Msg("1", "s@x", {"L@X"})}, &table);
  ASSERT_TRUE(out.ok()) << out.status();
  ASSERT_EQ(out->size(), 1u);
  EXPECT_THAT((*out)[0].recipients, UnorderedElementsAre("a@x", "b@x"));
  auto g = BuildGraphFromMessages(*out);
  ASSERT_TRUE(g.ok());
  EXPECT_TRUE(g->FindEdge("s@x", "a@x").has_value());
  EXPECT_TRUE(g->FindEdge("s@x", "b@x").has_value());
}

std::vector<Message> FanIn(const std::string& target, int senders) {
  std::vector<Message> m;
  for (int i = 0; i < senders; ++i) {
    m.push_back(Msg(std::to_string(i), "p" + std::to_string(i), {target}));
  }
  return m;
}

TEST(ExpandListsTest, InfersListFromTwelveSenders) {
  std::vector<Message> corpus = FanIn("q", 12);
  ListTable lists = InferMailingLists(corpus);
  ASSERT_TRUE(lists.contains("q"));
  EXPECT_EQ(lists["q"].size(), 12u);
  auto out = ExpandLists(corpus, nullptr);
  ASSERT_TRUE(out.ok());
  for (const Message& m : *out) {
    for (const auto& r : m.recipients) EXPECT_FALSE(lists.contains(r));
    EXPECT_EQ(m.recipients.size(), 11u);
  }
}

TEST(ExpandListsTest, TwoSendersStaysANode) {
  std::vector<Message> corpus = FanIn("q", 2);
  EXPECT_TRUE(InferMailingLists(corpus).empty());
  auto out = ExpandLists(corpus, nullptr);
  ASSERT_TRUE(out.ok());
  EXPECT_THAT((*out)[0].recipients, ElementsAre("q"));
}

TEST(ExpandListsTest, SenderThatAlsoSendsIsNotAList) {
  std::vector<Message> corpus = FanIn("q", 12);
  corpus.push_back(Msg("x", "q", {"p0"}));
  EXPECT_FALSE(InferMailingLists(corpus).contains("q"));
}

TEST(ExpandListsTest, NestedListsExpandUpToDepthLimit) {
  ListTable table = {{"l1", {"l2", "a"}}, {"l2", {"l3", "b"}}, {"l3", {"c"}}};
  auto out = ExpandLists({Msg("1", "s", {"l1"})}, &table);
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_THAT((*out)[0].recipients, UnorderedElementsAre("a", "b", "c"));

  table = {{"l1", {"l2"}}, {"l2", {"l3"}}, {"l3", {"l4"}}, {"l4", {"d"}}};
  auto deep = ExpandLists({Msg("1", "s", {"l1"})}, &table);
  ASSERT_FALSE(deep.ok());
  EXPECT_THAT(std::string(deep.status().message()), HasSubstr("depth"));
}

TEST(ExpandListsTest, CyclicListsAreRejected) {
  ListTable table = {{"l1", {"l2"}}, {"l2", {"l1"}}};
  EXPECT_FALSE(ExpandLists({Msg("1", "s", {"l1"})}, &table).ok());
}

TEST(ExpandListsTest, DropsSelfAndEmptyMessages) {
  auto out = ExpandLists(
      {Msg("1", "A", {"a", "B", "b"}), Msg("2", "c", {"C"})}, nullptr);
  ASSERT_TRUE(out.ok());
  ASSERT_EQ(out->size(), 1u);
  EXPECT_THAT((*out)[0].recipients, ElementsAre("b"));
}

TEST(LabelEdgesTest, SingleMessage) {
  std::vector<Message> m = {Msg("1", "a", {"b"}, "merger talk")};
  auto g = BuildGraphFromMessages(m);
  ASSERT_TRUE(g.ok());
  auto l = LabelEdges(*g, m, 1000);
  ASSERT_TRUE(l.ok());
  std::vector<std::string> got;
  for (TokenId t : l->tokens(0)) got.push_back(l->token(t));
  EXPECT_THAT(got, UnorderedElementsAre("merger", "talk", "merger talk"));
}

TEST(LabelEdgesTest, SetSemanticsAcrossMessages) {
  std::vector<Message> m = {Msg("1", "a", {"b"}, "budget"),
                            Msg("2", "b", {"a"}, "budget")};
  auto g = BuildGraphFromMessages(m);
  auto l = LabelEdges(*g, m, 10);
  ASSERT_TRUE(l.ok());
  EXPECT_EQ(l->tokens(0).size(), 1u);
}

TEST(LabelEdgesTest, CapKeepsMostFrequentThenLexicographic) {
  std::string body;
  // "w0000" .. "w1499" once each, plus "hot" three times.
  for (int i = 0; i < 1500; ++i) {
    body += "w" + std::string(4 - std::to_string(i).size(), '0') +
            std::to_string(i) + "\n";
  }
  std::vector<Message> m = {Msg("1", "a", {"b"}, body),
                            Msg("2", "a", {"b"}, "hot\nhot\nhot")};
  auto g = BuildGraphFromMessages(m);
  auto l = LabelEdges(*g, m, 1000);
  ASSERT_TRUE(l.ok()) << l.status();
  ASSERT_EQ(l->tokens(0).size(), 1000u);
  EXPECT_TRUE(l->Has(0, *l->FindToken("hot")));
  // Bigram counts are 1 too, and "hot hot" (2) outranks the ties; among the
  // 1-count tokens "w0000" sorts first.
  EXPECT_TRUE(l->Has(0, *l->FindToken("hot hot")));
  EXPECT_TRUE(l->Has(0, *l->FindToken("w0000")));
  EXPECT_FALSE(l->Has(0, *l->FindToken("w1499")));
}

TEST(JsonlTest, RoundTrip) {
  std::vector<Message> m = {Msg("1", "a", {"b", "c"}, "hi \"there\"\n"),
                            Msg("2", "c", {"a"}, "")};
  std::stringstream ss;
  WriteMessagesJsonl(m, ss);
  auto back = ReadMessagesJsonl(ss);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, m);
}

TEST(JsonlTest, MalformedLineIsCited) {
  std::stringstream ss;
  ss << R"({"id":"1","sender":"a","recipients":["b"],"body":""})" << "\n"
     << R"({"id":"2","sender":"a","recipients":["b"],"body":""})" << "\n"
     << "{not json\n";
  auto r = ReadMessagesJsonl(ss);
  ASSERT_FALSE(r.ok());
  EXPECT_THAT(std::string(r.status().message()), HasSubstr("line 3"));
}

}  // namespace
}  // namespace pfgraph
