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

// Command-line driver for the confidentiality pipeline.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pfgraph/io.h"
#include "pfgraph/pipeline.h"

namespace {

using pfgraph::RunConfig;

struct Overrides {
  std::string config;
  std::string messages;
  std::string lists;
  std::string vocabulary;
  std::string synthetic_spec;
  bool synthetic = false;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<double> dpsu_delta;
  std::optional<std::size_t> cap;
  std::vector<std::string> modes;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> binomial_deg;
  std::string out;
  std::string model;
  std::string task;
};

void AddCommon(CLI::App* cmd, Overrides* o) {
  cmd->add_option("--config", o->config, "Run config JSON file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--messages", o->messages, "Messages JSONL input");
  cmd->add_option("--lists", o->lists, "Mailing list table JSON");
  cmd->add_option("--vocabulary", o->vocabulary,
                  "Public token domain, one token per line");
  cmd->add_option("--synthetic-spec", o->synthetic_spec,
                  "Synthetic corpus spec JSON input")
      ->check(CLI::ExistingFile);
  cmd->add_flag("--synthetic", o->synthetic,
                "Use the default synthetic corpus as input");
  cmd->add_option("--epsilon", o->epsilon, "Privacy budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--delta", o->delta, "Markov quilt delta")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--dpsu-delta", o->dpsu_delta, "Set-union threshold delta");
  cmd->add_option("--cap", o->cap, "Per-edge n-gram cap c")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mode", o->modes,
                  "Privacy modes: edge,node,binomial,global,conditional,group")
      ->delimiter(',');
  cmd->add_option("--trials", o->trials, "Repetitions per mode")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o->seed, "Seed for sampling and noise");
  cmd->add_option("--binomial-deg", o->binomial_deg,
                  "Neighborhood size for the binomial model (default N_max)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o->out, "Output directory");
}

absl::StatusOr<RunConfig> Resolve(const Overrides& o, bool need_input) {
  RunConfig c;
  if (!o.config.empty()) {
    auto loaded = pfgraph::LoadRunConfig(o.config);
    if (!loaded.ok()) return loaded.status();
    c = *std::move(loaded);
  }
  if (!o.messages.empty()) {
    c.messages_path = o.messages;
    c.synthetic.reset();
  }
  if (!o.lists.empty()) c.lists_path = o.lists;
  if (!o.vocabulary.empty()) c.vocabulary_path = o.vocabulary;
  if (!o.synthetic_spec.empty()) {
    auto j = pfgraph::ReadJsonFile(o.synthetic_spec);
    if (!j.ok()) return j.status();
    auto spec = pfgraph::SyntheticSpec::FromJson(*j);
    if (!spec.ok()) return spec.status();
    c.synthetic = *spec;
    c.messages_path.reset();
  } else if (o.synthetic) {
    c.synthetic = pfgraph::SyntheticSpec{};
    c.messages_path.reset();
  }
  if (o.epsilon) c.epsilon = *o.epsilon;
  if (o.delta) c.delta = *o.delta;
  if (o.dpsu_delta) c.dpsu_delta = *o.dpsu_delta;
  if (o.cap) c.cap = *o.cap;
  if (!o.modes.empty()) {
    c.modes.clear();
    for (const std::string& name : o.modes) {
      auto m = pfgraph::ParsePrivacyMode(name);
      if (!m.ok()) return m.status();
      c.modes.push_back(*m);
    }
  }
  if (o.trials) c.trials = *o.trials;
  if (o.seed) c.seed = *o.seed;
  if (o.binomial_deg) c.binomial_deg = *o.binomial_deg;
  if (!o.out.empty()) c.out = o.out;
  if (!o.model.empty()) {
    auto k = pfgraph::ParseModelKind(o.model);
    if (!k.ok()) return k.status();
    c.attack_model = *k;
  }
  // Stages after ingest read artifacts, so the input is only bookkeeping.
  if (!need_input && !c.messages_path && !c.synthetic) {
    c.synthetic = pfgraph::SyntheticSpec{};
  }
  if (absl::Status s = c.Validate(); !s.ok()) return s;
  return c;
}

int Report(const absl::Status& s) {
  if (s.ok()) return 0;
  std::cerr << "error: " << s.message() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-confidentiality statistics under Pufferfish privacy"};
  app.require_subcommand(1);
  Overrides o;

  CLI::App* synth = app.add_subcommand(
      "synth", "Write a synthetic corpus (messages.jsonl, lists.json)");
  CLI::App* ingest = app.add_subcommand(
      "ingest", "Build graph and labeling artifacts from the input");
  CLI::App* sensitivity = app.add_subcommand(
      "sensitivity", "Fit a correlation model and compute its W");
  CLI::App* run = app.add_subcommand("run", "Run a private task across modes");
  CLI::App* attack =
      app.add_subcommand("attack", "Evaluate the attribute disclosure attack");
  CLI::App* report = app.add_subcommand("report", "Summarize stage outputs");
  CLI::App* all = app.add_subcommand("all", "Run every stage in order");
  for (CLI::App* cmd : {synth, ingest, sensitivity, run, attack, report, all}) {
    AddCommon(cmd, &o);
  }
  sensitivity
      ->add_option("--model", o.model, "conditional, global or binomial")
      ->required()
      ->check(CLI::IsMember({"conditional", "global", "binomial"}));
  attack->add_option("--model", o.model, "conditional, global or binomial")
      ->check(CLI::IsMember({"conditional", "global", "binomial"}));
  run->add_option("--task", o.task, "hist or dpsu")
      ->required()
      ->check(CLI::IsMember({"hist", "dpsu"}));

  CLI11_PARSE(app, argc, argv);

  const bool need_input = ingest->parsed() || all->parsed();
  auto config = Resolve(o, need_input);
  if (!config.ok()) {
    std::cerr << "error: " << config.status().message() << "\n";
    return 2;
  }
  if (synth->parsed()) return Report(pfgraph::CmdSynth(*config));
  if (ingest->parsed()) return Report(pfgraph::CmdIngest(*config));
  if (sensitivity->parsed()) {
    return Report(pfgraph::CmdSensitivity(
        *config, *pfgraph::ParseModelKind(o.model)));
  }
  if (run->parsed()) {
    return Report(pfgraph::CmdRun(*config, *pfgraph::ParseTask(o.task)));
  }
  if (attack->parsed()) return Report(pfgraph::CmdAttack(*config));
  if (report->parsed()) return Report(pfgraph::CmdReport(*config));
  return Report(pfgraph::CmdAll(*config));
}
