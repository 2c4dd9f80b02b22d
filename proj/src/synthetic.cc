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

#include "pfgraph/synthetic.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "pfgraph/rng.h"
#include "pfgraph/status_macros.h"

namespace pfgraph {
namespace {

using json = nlohmann::json;

constexpr std::array<const char*, 24> kSyllables = {
    "ka", "lo", "mi", "ne", "ru", "sa", "ti", "vo", "be", "da", "fi", "go",
    "hu", "ja", "ke", "li", "mo", "nu", "pa", "qui", "re", "so", "tu", "ze"};
constexpr std::size_t kWordSpace = 24 * 24 * 24;

std::string PersonId(std::size_t i) {
  return absl::StrFormat("u%04d@corp.example", i);
}

std::string ListId(std::size_t k) {
  return absl::StrFormat("list-%02d@corp.example", k);
}

}  // namespace

std::string SyntheticWord(std::size_t rank) {
  // 7919 is coprime with 24^3, so this permutes the word space.
  std::size_t code = (rank * 7919 + 13) % kWordSpace;
  std::string out;
  for (int k = 0; k < 3; ++k) {
    out += kSyllables[code % 24];
    code /= 24;
  }
  return out;
}

absl::Status SyntheticSpec::Validate() const {
  if (node_count < 2) {
    return absl::InvalidArgumentError("node_count must be at least 2");
  }
  if (branching < 1) {
    return absl::InvalidArgumentError("branching must be at least 1");
  }
  for (std::size_t s : list_sizes) {
    if (s < 2 || s > node_count) {
      return absl::InvalidArgumentError(
          absl::StrCat("list size ", s, " outside [2, node_count]"));
    }
  }
  if (vocabulary_size < 1 || vocabulary_size > kWordSpace) {
    return absl::InvalidArgumentError(
        absl::StrCat("vocabulary_size must be in [1, ", kWordSpace, "]"));
  }
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(seed_probability)) {
    return absl::InvalidArgumentError("seed_probability must be in [0, 1]");
  }
  if (!prob(propagation)) {
    return absl::InvalidArgumentError("propagation must be in [0, 1]");
  }
  if (!(zipf_exponent >= 0.0)) {
    return absl::InvalidArgumentError("zipf_exponent must be non-negative");
  }
  return absl::OkStatus();
}

json SyntheticSpec::ToJson() const {
  return {{"node_count", node_count},
          {"branching", branching},
          {"list_sizes", list_sizes},
          {"vocabulary_size", vocabulary_size},
          {"seed_probability", seed_probability},
          {"zipf_exponent", zipf_exponent},
          {"propagation", propagation},
          {"seed", seed}};
}

absl::StatusOr<SyntheticSpec> SyntheticSpec::FromJson(const json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("synthetic spec must be a JSON object");
  }
  SyntheticSpec s;
  try {
    s.node_count = j.value("node_count", s.node_count);
    s.branching = j.value("branching", s.branching);
    s.list_sizes = j.value("list_sizes", s.list_sizes);
    s.vocabulary_size = j.value("vocabulary_size", s.vocabulary_size);
    s.seed_probability = j.value("seed_probability", s.seed_probability);
    s.zipf_exponent = j.value("zipf_exponent", s.zipf_exponent);
    s.propagation = j.value("propagation", s.propagation);
    s.seed = j.value("seed", s.seed);
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("synthetic spec: ", e.what()));
  }
  RETURN_IF_ERROR(s.Validate());
  return s;
}

absl::StatusOr<SyntheticCorpus> GenerateSynthetic(const SyntheticSpec& spec) {
  RETURN_IF_ERROR(spec.Validate());
  std::mt19937_64 rng(spec.seed);
  std::vector<Message> messages;
  auto post = [&messages](std::string from, std::string to) {
    messages.push_back(Message{absl::StrFormat("m%07d", messages.size()),
                               std::move(from), {std::move(to)}, ""});
  };

  // Reporting tree, both directions, so everyone sends at least once and no
  // person is mistaken for a list.
  const std::size_t n = spec.node_count;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t boss = (i - 1) / spec.branching;
    post(PersonId(boss), PersonId(i));
    post(PersonId(i), PersonId(boss));
  }
  for (std::size_t boss = 0; boss < n; ++boss) {
    const std::size_t first = boss * spec.branching + 1;
    const std::size_t last = std::min(n, first + spec.branching);
    for (std::size_t a = first; a < last; ++a) {
      for (std::size_t b = a + 1; b < last; ++b) {
        post(PersonId(a), PersonId(b));
      }
    }
  }

  ListTable lists;
  std::vector<std::size_t> people(n);
  for (std::size_t k = 0; k < spec.list_sizes.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) people[i] = i;
    const std::size_t size = spec.list_sizes[k];
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(people[i], people[i + UniformIndex(rng, n - i)]);
    }
    std::vector<std::size_t> members(people.begin(), people.begin() + size);
    std::sort(members.begin(), members.end());
    auto& table_entry = lists[ListId(k)];
    for (std::size_t m : members) {
      table_entry.push_back(PersonId(m));
      post(PersonId(m), ListId(k));
    }
  }

  ASSIGN_OR_RETURN(std::vector<Message> expanded,
                   ExpandLists(messages, &lists));
  ASSIGN_OR_RETURN(OrgGraph graph, BuildGraphFromMessages(expanded));

  // Seed, then one propagation pass from the seeds.
  const std::size_t m = graph.edge_count();
  std::vector<std::vector<std::uint32_t>> planted(m);
  std::vector<std::vector<std::uint32_t>> seeded(m);
  std::vector<char> mark(m);
  std::vector<EdgeIndex> seeds_of_rank;
  for (std::uint32_t r = 0; r < spec.vocabulary_size; ++r) {
    const double p = spec.seed_probability /
                     std::pow(static_cast<double>(r + 1), spec.zipf_exponent);
    std::fill(mark.begin(), mark.end(), 0);
    seeds_of_rank.clear();
    for (EdgeIndex e = 0; e < m; ++e) {
      if (UniformUnit(rng) < p) {
        mark[e] = 1;
        seeds_of_rank.push_back(e);
      }
    }
    if (spec.propagation > 0.0) {
      for (EdgeIndex e : seeds_of_rank) {
        graph.ForEachNeighbor(e, [&](EdgeIndex f) {
          if (UniformUnit(rng) < spec.propagation) mark[f] = 1;
        });
      }
    }
    for (EdgeIndex e : seeds_of_rank) seeded[e].push_back(r);
    for (EdgeIndex e = 0; e < m; ++e) {
      if (mark[e]) planted[e].push_back(r);
    }
  }

  std::vector<std::vector<std::string>> planted_words(m);
  std::vector<std::vector<std::string>> seeded_words(m);
  for (EdgeIndex e = 0; e < m; ++e) {
    const Edge& ed = graph.edge(e);
    for (std::uint32_t r : planted[e]) {
      std::string word = SyntheticWord(r);
      const bool forward = (rng() & 1) == 0;
      std::string from = graph.node_name(forward ? ed.a : ed.b);
      std::string to = graph.node_name(forward ? ed.b : ed.a);
      messages.push_back(Message{absl::StrFormat("m%07d", messages.size()),
                                 std::move(from), {std::move(to)}, word});
      planted_words[e].push_back(std::move(word));
    }
    for (std::uint32_t r : seeded[e]) seeded_words[e].push_back(SyntheticWord(r));
  }

  const std::size_t cap = spec.vocabulary_size;
  ASSIGN_OR_RETURN(PropertyLabeling labeling,
                   PropertyLabeling::FromStrings(cap, planted_words));
  ASSIGN_OR_RETURN(PropertyLabeling seeds,
                   PropertyLabeling::FromStrings(cap, seeded_words));
  return SyntheticCorpus{std::move(messages), std::move(lists),
                         std::move(graph), std::move(labeling),
                         std::move(seeds)};
}

}  // namespace pfgraph
