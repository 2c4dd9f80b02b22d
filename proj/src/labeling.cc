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

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace pfgraph {

absl::StatusOr<PropertyLabeling> PropertyLabeling::Create(
    std::size_t cap, std::vector<std::string> vocabulary,
    std::vector<std::vector<TokenId>> edge_tokens) {
  if (cap < 1) return absl::InvalidArgumentError("cap must be at least 1");
  for (std::size_t i = 1; i < vocabulary.size(); ++i) {
    if (!(vocabulary[i - 1] < vocabulary[i])) {
      return absl::InvalidArgumentError(
          "vocabulary must be sorted and free of duplicates");
    }
  }
  PropertyLabeling l;
  l.cap_ = cap;
  l.edge_offsets_.reserve(edge_tokens.size() + 1);
  l.edge_offsets_.push_back(0);
  std::vector<std::size_t> counts(vocabulary.size(), 0);
  for (std::size_t e = 0; e < edge_tokens.size(); ++e) {
    auto& set = edge_tokens[e];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() > cap) {
      return absl::InvalidArgumentError(absl::StrCat(
          "edge ", e, " carries ", set.size(), " tokens, above cap ", cap));
    }
    for (TokenId t : set) {
      if (t >= vocabulary.size()) {
        return absl::InvalidArgumentError(
            absl::StrCat("token id ", t, " outside vocabulary"));
      }
      ++counts[t];
      l.edge_tokens_.push_back(t);
    }
    l.edge_offsets_.push_back(l.edge_tokens_.size());
  }
  l.token_offsets_.assign(vocabulary.size() + 1, 0);
  for (std::size_t t = 0; t < vocabulary.size(); ++t) {
    l.token_offsets_[t + 1] = l.token_offsets_[t] + counts[t];
  }
  l.token_edges_.resize(l.edge_tokens_.size());
  std::vector<std::size_t> cursor(l.token_offsets_.begin(),
                                  l.token_offsets_.end() - 1);
  for (std::size_t e = 0; e + 1 < l.edge_offsets_.size(); ++e) {
    for (std::size_t k = l.edge_offsets_[e]; k < l.edge_offsets_[e + 1]; ++k) {
      l.token_edges_[cursor[l.edge_tokens_[k]]++] = static_cast<EdgeIndex>(e);
    }
  }
  l.vocabulary_ = std::move(vocabulary);
  return l;
}

absl::StatusOr<PropertyLabeling> PropertyLabeling::FromStrings(
    std::size_t cap, const std::vector<std::vector<std::string>>& edge_tokens,
    const std::vector<std::string>& extra_vocabulary) {
  std::vector<std::string> vocab(extra_vocabulary);
  for (const auto& set : edge_tokens) {
    vocab.insert(vocab.end(), set.begin(), set.end());
  }
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
  std::vector<std::vector<TokenId>> ids(edge_tokens.size());
  for (std::size_t e = 0; e < edge_tokens.size(); ++e) {
    for (const auto& s : edge_tokens[e]) {
      ids[e].push_back(static_cast<TokenId>(
          std::lower_bound(vocab.begin(), vocab.end(), s) - vocab.begin()));
    }
  }
  return Create(cap, std::move(vocab), std::move(ids));
}

absl::StatusOr<PropertyLabeling> PropertyLabeling::WithVocabulary(
    const std::vector<std::string>& extra) const {
  std::vector<std::vector<std::string>> sets(edge_count());
  for (EdgeIndex e = 0; e < edge_count(); ++e) {
    for (TokenId t : tokens(e)) sets[e].push_back(vocabulary_[t]);
  }
  std::vector<std::string> vocab(vocabulary_);
  vocab.insert(vocab.end(), extra.begin(), extra.end());
  return FromStrings(cap_, sets, vocab);
}

std::optional<TokenId> PropertyLabeling::FindToken(std::string_view token) const {
  auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), token);
  if (it == vocabulary_.end() || *it != token) return std::nullopt;
  return static_cast<TokenId>(it - vocabulary_.begin());
}

bool PropertyLabeling::Has(EdgeIndex e, TokenId t) const {
  auto set = tokens(e);
  return std::binary_search(set.begin(), set.end(), t);
}

}  // namespace pfgraph
