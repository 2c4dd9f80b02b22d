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

#ifndef PFGRAPH_LABELING_H_
#define PFGRAPH_LABELING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "pfgraph/graph.h"

namespace pfgraph {

using TokenId = std::uint32_t;

// Per-edge set of properties (n-gram tokens), each set holding at most `cap`
// tokens. A token absent from an edge's set is the property being false there.
//
// Token ids index the sorted vocabulary. Both directions are stored: the tokens
// of each edge, and the edges carrying each token.
class PropertyLabeling {
 public:
  // `vocabulary` must be sorted and duplicate-free. `edge_tokens[e]` holds
  // token ids for edge e; it is sorted and deduplicated here.
  static absl::StatusOr<PropertyLabeling> Create(
      std::size_t cap, std::vector<std::string> vocabulary,
      std::vector<std::vector<TokenId>> edge_tokens);

  // Convenience for tests and fixtures: token strings per edge. The vocabulary
  // is the union of the sets plus `extra_vocabulary`.
  static absl::StatusOr<PropertyLabeling> FromStrings(
      std::size_t cap, const std::vector<std::vector<std::string>>& edge_tokens,
      const std::vector<std::string>& extra_vocabulary = {});

  // Same labels over the vocabulary extended with `extra` (the a-priori token
  // domain when it is larger than what was observed).
  absl::StatusOr<PropertyLabeling> WithVocabulary(
      const std::vector<std::string>& extra) const;

  std::size_t cap() const { return cap_; }
  std::size_t edge_count() const { return edge_offsets_.size() - 1; }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  const std::string& token(TokenId t) const { return vocabulary_[t]; }
  std::optional<TokenId> FindToken(std::string_view token) const;

  std::span<const TokenId> tokens(EdgeIndex e) const {
    return {edge_tokens_.data() + edge_offsets_[e],
            edge_tokens_.data() + edge_offsets_[e + 1]};
  }
  std::span<const EdgeIndex> edges_with(TokenId t) const {
    return {token_edges_.data() + token_offsets_[t],
            token_edges_.data() + token_offsets_[t + 1]};
  }
  // Number of edges labeled with `t`.
  std::size_t freq(TokenId t) const {
    return token_offsets_[t + 1] - token_offsets_[t];
  }
  bool Has(EdgeIndex e, TokenId t) const;

  // Total number of (edge, token) labels.
  std::size_t label_count() const { return edge_tokens_.size(); }

  friend bool operator==(const PropertyLabeling&,
                         const PropertyLabeling&) = default;

 private:
  PropertyLabeling() = default;

  std::size_t cap_ = 0;
  std::vector<std::string> vocabulary_;
  std::vector<std::size_t> edge_offsets_;
  std::vector<TokenId> edge_tokens_;
  std::vector<std::size_t> token_offsets_;
  std::vector<EdgeIndex> token_edges_;
};

}  // namespace pfgraph

#endif  // PFGRAPH_LABELING_H_
