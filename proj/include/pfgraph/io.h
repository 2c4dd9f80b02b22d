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

#ifndef PFGRAPH_IO_H_
#define PFGRAPH_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "pfgraph/graph.h"
#include "pfgraph/labeling.h"

namespace pfgraph {

// RFC 4180 field quoting: quoted only when it holds a comma, quote, CR or LF.
std::string CsvField(std::string_view field);
void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields);

// All rows, header included. Errors name the 1-based line of an unterminated
// quote.
absl::StatusOr<std::vector<std::vector<std::string>>> ReadCsv(std::istream& in);

// node_a,node_b
void WriteEdgeList(const OrgGraph& graph, std::ostream& out);
absl::StatusOr<OrgGraph> ReadEdgeList(std::istream& in);

// node_a,node_b,token: one row per (edge, token) label.
void WriteLabeling(const OrgGraph& graph, const PropertyLabeling& labeling,
                   std::ostream& out);
absl::StatusOr<PropertyLabeling> ReadLabeling(
    const OrgGraph& graph, std::istream& in,
    std::vector<std::string> vocabulary, std::size_t cap);

// One token per line.
void WriteVocabulary(const PropertyLabeling& labeling, std::ostream& out);
absl::StatusOr<std::vector<std::string>> ReadVocabulary(std::istream& in);

nlohmann::json GraphStatsJson(const OrgGraph& graph,
                              const PropertyLabeling& labeling);

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);
absl::Status WriteFile(const std::filesystem::path& path,
                       std::string_view contents);
absl::StatusOr<nlohmann::json> ReadJsonFile(const std::filesystem::path& path);
// Pretty-printed with two-space indent and a trailing newline.
absl::Status WriteJsonFile(const std::filesystem::path& path,
                           const nlohmann::json& j);

}  // namespace pfgraph

#endif  // PFGRAPH_IO_H_
