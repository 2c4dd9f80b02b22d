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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "pfgraph/kernels.h"
#include "pfgraph/status_macros.h"

namespace pfgraph {
namespace {

using json = nlohmann::json;

// Decodes one UTF-8 code point starting at `i`, advancing `i`. Malformed bytes
// decode as themselves, one byte at a time.
char32_t DecodeUtf8(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto byte = [&](std::size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x1F) << 6) | byte(1);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x0F) << 12) | (byte(1) << 6) |
                  byte(2);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) | (byte(1) << 12) |
                  (byte(2) << 6) | byte(3);
    i += 4;
    return cp;
  }
  ++i;
  return b0;
}

// Unicode White_Space property.
bool IsSpace(char32_t c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

// ASCII punctuation plus the Latin-1, General Punctuation and CJK punctuation
// code points that show up in mail bodies.
bool IsPunct(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  return c == 0xA1 || c == 0xA7 || c == 0xAB || c == 0xB6 || c == 0xB7 ||
         c == 0xBB || c == 0xBF || (c >= 0x2010 && c <= 0x2027) ||
         (c >= 0x2030 && c <= 0x205E) || (c >= 0x3001 && c <= 0x3003) ||
         (c >= 0x3008 && c <= 0x3011) || (c >= 0xFF01 && c <= 0xFF0F);
}

std::string StripAndLower(std::string_view word) {
  // Collect code point boundaries so punctuation can be trimmed from both ends.
  std::vector<std::pair<std::size_t, char32_t>> cps;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t start = i;
    cps.emplace_back(start, DecodeUtf8(word, i));
  }
  std::size_t lo = 0;
  std::size_t hi = cps.size();
  while (lo < hi && IsPunct(cps[lo].second)) ++lo;
  while (hi > lo && IsPunct(cps[hi - 1].second)) --hi;
  if (lo == hi) return {};
  const std::size_t begin = cps[lo].first;
  const std::size_t end = hi < cps.size() ? cps[hi].first : word.size();
  std::string out(word.substr(begin, end - begin));
  for (char& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

absl::StatusOr<std::string> RequireString(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    return absl::InvalidArgumentError(absl::StrCat("missing key '", key, "'"));
  }
  if (!it->is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat("key '", key, "' must be a string"));
  }
  return it->get<std::string>();
}

absl::StatusOr<Message> ParseMessage(const json& obj) {
  if (!obj.is_object()) {
    return absl::InvalidArgumentError("expected a JSON object");
  }
  Message m;
  ASSIGN_OR_RETURN(m.id, RequireString(obj, "id"));
  ASSIGN_OR_RETURN(m.sender, RequireString(obj, "sender"));
  ASSIGN_OR_RETURN(m.body, RequireString(obj, "body"));
  auto it = obj.find("recipients");
  if (it == obj.end() || !it->is_array()) {
    return absl::InvalidArgumentError("key 'recipients' must be an array");
  }
  for (const json& r : *it) {
    if (!r.is_string()) {
      return absl::InvalidArgumentError("recipients must be strings");
    }
    m.recipients.push_back(r.get<std::string>());
  }
  return m;
}

}  // namespace

std::vector<std::string> ExtractNgrams(std::string_view body) {
  std::vector<std::string> unigrams;
  std::size_t word_start = std::string_view::npos;
  auto flush = [&](std::size_t end) {
    if (word_start == std::string_view::npos) return;
    std::string tok = StripAndLower(body.substr(word_start, end - word_start));
    if (!tok.empty()) unigrams.push_back(std::move(tok));
    word_start = std::string_view::npos;
  };
  for (std::size_t i = 0; i < body.size();) {
    const std::size_t at = i;
    const char32_t c = DecodeUtf8(body, i);
    if (IsSpace(c)) {
      flush(at);
    } else if (word_start == std::string_view::npos) {
      word_start = at;
    }
  }
  flush(body.size());

  std::vector<std::string> out = unigrams;
  for (std::size_t i = 0; i + 1 < unigrams.size(); ++i) {
    out.push_back(absl::StrCat(unigrams[i], " ", unigrams[i + 1]));
  }
  return out;
}

ListTable InferMailingLists(const std::vector<Message>& messages,
                            std::size_t min_distinct_senders) {
  std::unordered_set<std::string> senders;
  std::unordered_map<std::string, std::set<std::string>> heard_from;
  for (const Message& m : messages) {
    senders.insert(NormalizeNodeId(m.sender));
  }
  for (const Message& m : messages) {
    const std::string s = NormalizeNodeId(m.sender);
    for (const std::string& r : m.recipients) {
      std::string id = NormalizeNodeId(r);
      if (id == s || senders.contains(id)) continue;
      heard_from[id].insert(s);
    }
  }
  ListTable lists;
  for (auto& [id, from] : heard_from) {
    if (from.size() >= min_distinct_senders) {
      lists.emplace(id, std::vector<std::string>(from.begin(), from.end()));
    }
  }
  return lists;
}

absl::StatusOr<std::vector<Message>> ExpandLists(
    std::vector<Message> messages, const ListTable* table,
    const ListExpansionOptions& options) {
  ListTable lists;
  if (table != nullptr) {
    for (const auto& [id, members] : *table) {
      auto& dst = lists[NormalizeNodeId(id)];
      for (const auto& m : members) dst.push_back(NormalizeNodeId(m));
    }
  } else {
    lists = InferMailingLists(messages, options.min_distinct_senders);
  }

  std::function<absl::Status(const std::string&, int, std::vector<std::string>&)>
      expand = [&](const std::string& id, int depth,
                   std::vector<std::string>& out) -> absl::Status {
    auto it = lists.find(id);
    if (it == lists.end()) {
      out.push_back(id);
      return absl::OkStatus();
    }
    if (depth >= options.max_depth) {
      return absl::InvalidArgumentError(absl::StrCat(
          "list '", id, "' nested beyond expansion depth ", options.max_depth));
    }
    for (const std::string& member : it->second) {
      RETURN_IF_ERROR(expand(member, depth + 1, out));
    }
    return absl::OkStatus();
  };

  std::vector<Message> out;
  out.reserve(messages.size());
  for (Message& m : messages) {
    m.sender = NormalizeNodeId(m.sender);
    std::vector<std::string> recipients;
    for (const std::string& r : m.recipients) {
      RETURN_IF_ERROR(expand(NormalizeNodeId(r), 0, recipients));
    }
    std::sort(recipients.begin(), recipients.end());
    recipients.erase(std::unique(recipients.begin(), recipients.end()),
                     recipients.end());
    std::erase(recipients, m.sender);
    std::erase(recipients, std::string());
    if (recipients.empty()) continue;
    m.recipients = std::move(recipients);
    out.push_back(std::move(m));
  }
  return out;
}

absl::StatusOr<OrgGraph> BuildGraphFromMessages(
    const std::vector<Message>& messages) {
  std::vector<OrgGraph::NodePair> pairs;
  for (const Message& m : messages) {
    const std::string s = NormalizeNodeId(m.sender);
    for (const std::string& r : m.recipients) {
      std::string id = NormalizeNodeId(r);
      if (id == s) continue;
      pairs.emplace_back(s, std::move(id));
    }
  }
  return OrgGraph::Build(pairs);
}

absl::StatusOr<PropertyLabeling> LabelEdges(
    const OrgGraph& graph, const std::vector<Message>& messages,
    std::size_t cap) {
  if (cap < 1) return absl::InvalidArgumentError("cap must be at least 1");
  const auto ngrams = kernels::ExtractNgramsBatch(messages);

  std::unordered_map<std::string, std::uint32_t> intern;
  std::vector<std::string> interned;
  std::vector<std::unordered_map<std::uint32_t, std::uint64_t>> per_edge(
      graph.edge_count());
  std::vector<std::uint32_t> ids;
  for (std::size_t i = 0; i < messages.size(); ++i) {
    const Message& m = messages[i];
    ids.clear();
    for (const std::string& tok : ngrams[i]) {
      auto [it, inserted] =
          intern.try_emplace(tok, static_cast<std::uint32_t>(interned.size()));
      if (inserted) interned.push_back(tok);
      ids.push_back(it->second);
    }
    auto s = graph.FindNode(m.sender);
    for (const std::string& r : m.recipients) {
      if (NormalizeNodeId(r) == NormalizeNodeId(m.sender)) continue;
      auto t = graph.FindNode(r);
      std::optional<EdgeIndex> e;
      if (s && t) e = graph.FindEdge(*s, *t);
      if (!e) {
        return absl::InvalidArgumentError(
            absl::StrCat("message '", m.id, "': no graph edge between ",
                         m.sender, " and ", r));
      }
      auto& counts = per_edge[*e];
      for (std::uint32_t id : ids) ++counts[id];
    }
  }

  // Vocabulary: every observed token, sorted.
  std::vector<std::uint32_t> order(interned.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return interned[a] < interned[b];
  });
  std::vector<TokenId> remap(interned.size());
  std::vector<std::string> vocabulary;
  vocabulary.reserve(interned.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    vocabulary.push_back(interned[order[k]]);
  }

  std::vector<std::vector<TokenId>> edge_tokens(graph.edge_count());
  std::vector<std::pair<std::uint64_t, TokenId>> ranked;
  for (std::size_t e = 0; e < per_edge.size(); ++e) {
    ranked.clear();
    for (const auto& [id, count] : per_edge[e]) {
      ranked.emplace_back(count, remap[id]);
    }
    // Most frequent first; ties by ascending token (= ascending id).
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    if (ranked.size() > cap) ranked.resize(cap);
    for (const auto& [count, id] : ranked) edge_tokens[e].push_back(id);
  }
  return PropertyLabeling::Create(cap, std::move(vocabulary),
                                  std::move(edge_tokens));
}

absl::StatusOr<std::vector<Message>> ReadMessagesJsonl(std::istream& in) {
  std::vector<Message> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": malformed JSON"));
    }
    auto msg = ParseMessage(obj);
    if (!msg.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": ", msg.status().message()));
    }
    out.push_back(*std::move(msg));
  }
  return out;
}

void WriteMessagesJsonl(const std::vector<Message>& messages,
                        std::ostream& out) {
  for (const Message& m : messages) {
    json obj = {{"id", m.id},
                {"sender", m.sender},
                {"recipients", m.recipients},
                {"body", m.body}};
    out << obj.dump() << '\n';
  }
}

absl::StatusOr<ListTable> ReadListTable(std::istream& in) {
  json obj = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    return absl::InvalidArgumentError("list table must be a JSON object");
  }
  ListTable table;
  for (const auto& [id, members] : obj.items()) {
    if (!members.is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat("list '", id, "': members must be an array"));
    }
    auto& dst = table[id];
    for (const json& m : members) {
      if (!m.is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat("list '", id, "': members must be strings"));
      }
      dst.push_back(m.get<std::string>());
    }
  }
  return table;
}

}  // namespace pfgraph
