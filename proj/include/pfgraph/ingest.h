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

#ifndef PFGRAPH_INGEST_H_
#define PFGRAPH_INGEST_H_

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "pfgraph/graph.h"
#include "pfgraph/labeling.h"

namespace pfgraph {

struct Message {
  std::string id;
  std::string sender;
  std::vector<std::string> recipients;
  std::string body;

  friend bool operator==(const Message&, const Message&) = default;
};

// Mailing list id -> member node ids.
using ListTable = std::map<std::string, std::vector<std::string>>;

struct ListExpansionOptions {
  // An address that never sends and hears from at least this many distinct
  // senders is treated as a list whose members are those senders.
  std::size_t min_distinct_senders = 10;
  // Lists nested deeper than this are rejected.
  int max_depth = 3;
};

// Applies the inference rule above to a corpus. Ids in the result are
// normalized.
ListTable InferMailingLists(const std::vector<Message>& messages,
                            std::size_t min_distinct_senders = 10);

// Replaces list recipients with their members. With `table == nullptr` the
// lists are inferred from the corpus. Addresses are normalized, the sender is
// dropped from its own recipients, recipients are deduplicated, and messages
// left without recipients are dropped.
absl::StatusOr<std::vector<Message>> ExpandLists(
    std::vector<Message> messages, const ListTable* table,
    const ListExpansionOptions& options = {});

// Lowercased whitespace-split unigrams with leading/trailing punctuation
// stripped, followed by the adjacent bigrams joined with one space. Returns a
// multiset (repeats preserved).
std::vector<std::string> ExtractNgrams(std::string_view body);

// One edge per distinct (sender, recipient) pair.
absl::StatusOr<OrgGraph> BuildGraphFromMessages(
    const std::vector<Message>& messages);

// Per edge: the union of n-grams over all messages between its endpoints,
// truncated to the `cap` most frequent (occurrence count, ties broken by
// ascending token). The vocabulary is every token observed in the corpus.
absl::StatusOr<PropertyLabeling> LabelEdges(
    const OrgGraph& graph, const std::vector<Message>& messages,
    std::size_t cap);

// JSONL with keys id, sender, recipients, body. Errors cite the line number.
absl::StatusOr<std::vector<Message>> ReadMessagesJsonl(std::istream& in);
void WriteMessagesJsonl(const std::vector<Message>& messages,
                        std::ostream& out);

// JSON object: list id -> array of member ids.
absl::StatusOr<ListTable> ReadListTable(std::istream& in);

}  // namespace pfgraph

#endif  // PFGRAPH_INGEST_H_
