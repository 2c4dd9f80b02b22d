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

#include "pfgraph/io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace pfgraph {
namespace {

absl::Status CheckHeader(const std::vector<std::vector<std::string>>& rows,
                         const std::vector<std::string>& header) {
  if (rows.empty() || rows.front() != header) {
    std::string want;
    for (const auto& h : header) absl::StrAppend(&want, want.empty() ? "" : ",", h);
    return absl::InvalidArgumentError(
        absl::StrCat("line 1: expected header '", want, "'"));
  }
  return absl::OkStatus();
}

}  // namespace

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << CsvField(fields[i]);
  }
  out << '\n';
}

absl::StatusOr<std::vector<std::vector<std::string>>> ReadCsv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  std::size_t line = 1, quote_line = 0;
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        quote_line = line;
        any = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        if (any || !field.empty()) {
          row.push_back(std::move(field));
          rows.push_back(std::move(row));
        }
        field.clear();
        row.clear();
        any = false;
        break;
      default:
        field += c;
        any = true;
    }
  }
  if (quoted) {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", quote_line, ": unterminated quoted field"));
  }
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteEdgeList(const OrgGraph& graph, std::ostream& out) {
  WriteCsvRow(out, {"node_a", "node_b"});
  for (const Edge& e : graph.edges()) {
    WriteCsvRow(out, {graph.node_name(e.a), graph.node_name(e.b)});
  }
}

absl::StatusOr<OrgGraph> ReadEdgeList(std::istream& in) {
  auto rows = ReadCsv(in);
  if (!rows.ok()) return rows.status();
  if (absl::Status s = CheckHeader(*rows, {"node_a", "node_b"}); !s.ok()) {
    return s;
  }
  std::vector<OrgGraph::NodePair> pairs;
  for (std::size_t i = 1; i < rows->size(); ++i) {
    const auto& r = (*rows)[i];
    if (r.size() != 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i + 1, ": expected 2 fields, got ", r.size()));
    }
    pairs.emplace_back(r[0], r[1]);
  }
  return OrgGraph::Build(pairs);
}

void WriteLabeling(const OrgGraph& graph, const PropertyLabeling& labeling,
                   std::ostream& out) {
  WriteCsvRow(out, {"node_a", "node_b", "token"});
  for (EdgeIndex e = 0; e < labeling.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    for (TokenId t : labeling.tokens(e)) {
      WriteCsvRow(out, {graph.node_name(ed.a), graph.node_name(ed.b),
                        labeling.token(t)});
    }
  }
}

absl::StatusOr<PropertyLabeling> ReadLabeling(
    const OrgGraph& graph, std::istream& in,
    std::vector<std::string> vocabulary, std::size_t cap) {
  auto rows = ReadCsv(in);
  if (!rows.ok()) return rows.status();
  if (absl::Status s = CheckHeader(*rows, {"node_a", "node_b", "token"});
      !s.ok()) {
    return s;
  }
  std::vector<std::vector<TokenId>> edges(graph.edge_count());
  for (std::size_t i = 1; i < rows->size(); ++i) {
    const auto& r = (*rows)[i];
    if (r.size() != 3) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i + 1, ": expected 3 fields, got ", r.size()));
    }
    auto e = graph.FindEdge(r[0], r[1]);
    if (!e) {
      return absl::NotFoundError(absl::StrCat("row ", i + 1, ": no edge (", r[0],
                                              ", ", r[1], ") in the graph"));
    }
    auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), r[2]);
    if (it == vocabulary.end() || *it != r[2]) {
      return absl::NotFoundError(absl::StrCat(
          "row ", i + 1, ": token '", r[2], "' is not in the vocabulary"));
    }
    edges[*e].push_back(static_cast<TokenId>(it - vocabulary.begin()));
  }
  return PropertyLabeling::Create(cap, std::move(vocabulary), std::move(edges));
}

void WriteVocabulary(const PropertyLabeling& labeling, std::ostream& out) {
  for (const std::string& t : labeling.vocabulary()) out << t << '\n';
}

absl::StatusOr<std::vector<std::string>> ReadVocabulary(std::istream& in) {
  std::vector<std::string> vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    vocab.push_back(line);
  }
  if (!std::is_sorted(vocab.begin(), vocab.end()) ||
      std::adjacent_find(vocab.begin(), vocab.end()) != vocab.end()) {
    return absl::InvalidArgumentError(
        "vocabulary must be sorted and free of duplicates");
  }
  return vocab;
}

nlohmann::json GraphStatsJson(const OrgGraph& graph,
                              const PropertyLabeling& labeling) {
  const DegreeStats& s = graph.stats();
  return {{"nodes", s.node_count},
          {"edges", s.edge_count},
          {"max_degree", s.max_degree},
          {"max_neighborhood", s.max_neighborhood},
          {"vocabulary", labeling.vocabulary_size()},
          {"labels", labeling.label_count()},
          {"cap", labeling.cap()}};
}

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    absl::StrAppendFormat(&out, "%02x", digest[i]);
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteFile(const std::filesystem::path& path,
                       std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    return absl::DataLossError(absl::StrCat("write failed: ", path.string()));
  }
  return absl::OkStatus();
}

absl::StatusOr<nlohmann::json> ReadJsonFile(const std::filesystem::path& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  nlohmann::json j = nlohmann::json::parse(*text, nullptr, false);
  if (j.is_discarded()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": malformed JSON"));
  }
  return j;
}

absl::Status WriteJsonFile(const std::filesystem::path& path,
                           const nlohmann::json& j) {
  return WriteFile(path, j.dump(2) + "\n");
}

}  // namespace pfgraph
