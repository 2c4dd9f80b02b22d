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

#include "pfgraph/pipeline.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "pfgraph/attack.h"
#include "pfgraph/ingest.h"
#include "pfgraph/io.h"
#include "pfgraph/rng.h"
#include "pfgraph/status_macros.h"
#include "pfgraph/tasks.h"

namespace pfgraph {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr char kGraphFile[] = "graph.csv";
constexpr char kLabelingFile[] = "labeling.csv";
constexpr char kVocabularyFile[] = "vocabulary.txt";
constexpr char kStatsFile[] = "stats.json";

std::string Num(double x) { return absl::StrFormat("%.10g", x); }

std::string S(std::string_view v) { return std::string(v); }

ModelKind KindForMode(PrivacyMode mode) {
  switch (mode) {
    case PrivacyMode::kGlobal:
      return ModelKind::kGlobal;
    case PrivacyMode::kBinomial:
      return ModelKind::kBinomial;
    default:
      return ModelKind::kConditional;
  }
}

bool IsModelMode(PrivacyMode mode) {
  return mode == PrivacyMode::kConditional || mode == PrivacyMode::kGlobal ||
         mode == PrivacyMode::kBinomial;
}

std::string SensitivityJsonName(ModelKind kind) {
  return absl::StrCat("sensitivity_", S(ModelKindName(kind)), ".json");
}

// Inputs that change a fitted W.
std::string FitHash(const RunConfig& c) {
  json j = {{"seed", c.seed},
            {"fit_properties", c.fit_properties},
            {"sample_cap", c.fit.sample_cap},
            {"observation_cap", c.fit.observation_cap},
            {"fraction_bins", c.fit.fraction_bins},
            {"binomial_deg", c.binomial_deg ? json(*c.binomial_deg) : json()}};
  return Sha256Hex(j.dump());
}

FitOptions FitOptionsFor(const RunConfig& c) {
  FitOptions o = c.fit;
  o.seed = c.seed;
  return o;
}

absl::StatusOr<std::string> HashArtifactFiles(const fs::path& dir) {
  std::string all;
  for (const char* name : {kGraphFile, kLabelingFile, kVocabularyFile}) {
    auto text = ReadFile(dir / name);
    if (!text.ok()) {
      return absl::FailedPreconditionError(absl::StrCat(
          "missing artifact ", (dir / name).string(), "; run ingest first"));
    }
    absl::StrAppend(&all, name, "\n", Sha256Hex(*text), "\n");
  }
  return Sha256Hex(all);
}

template <typename T>
absl::Status Get(const json& j, const char* key, T* out) {
  if (!j.contains(key)) return absl::OkStatus();
  try {
    *out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("config key '", key, "': ", e.what()));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Message>> LoadMessages(const RunConfig& config,
                                                  ListTable* lists,
                                                  bool* have_lists) {
  *have_lists = false;
  if (config.synthetic) {
    ASSIGN_OR_RETURN(SyntheticCorpus corpus, GenerateSynthetic(*config.synthetic));
    *lists = std::move(corpus.lists);
    *have_lists = true;
    return std::move(corpus.messages);
  }
  std::ifstream in(*config.messages_path);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("cannot open ", *config.messages_path));
  }
  ASSIGN_OR_RETURN(std::vector<Message> messages, ReadMessagesJsonl(in));
  if (config.lists_path) {
    std::ifstream lin(*config.lists_path);
    if (!lin) {
      return absl::NotFoundError(
          absl::StrCat("cannot open ", *config.lists_path));
    }
    ASSIGN_OR_RETURN(*lists, ReadListTable(lin));
    *have_lists = true;
  }
  return messages;
}

absl::StatusOr<json> LoadChecked(const RunConfig& config,
                                 const Artifacts& artifacts,
                                 const std::string& name) {
  const fs::path path = config.out / name;
  auto j = ReadJsonFile(path);
  if (!j.ok()) {
    return absl::FailedPreconditionError(
        absl::StrCat("missing ", path.string(), ": ", j.status().message()));
  }
  if (j->value("artifact_hash", std::string()) != artifacts.hash) {
    return absl::FailedPreconditionError(absl::StrCat(
        path.string(),
        " is stale: it was computed from other graph/labeling artifacts"));
  }
  return j;
}

absl::StatusOr<SensitivitySource> SourceFor(const RunConfig& config,
                                            const Artifacts& artifacts) {
  SensitivitySource source;
  source.stats = artifacts.graph.stats();
  std::set<ModelKind> kinds;
  for (PrivacyMode m : config.modes) {
    if (IsModelMode(m)) kinds.insert(KindForMode(m));
  }
  for (ModelKind k : kinds) {
    ASSIGN_OR_RETURN(SensitivityReport report,
                     LoadSensitivityReport(config, artifacts, k));
    source.Add(report);
  }
  return source;
}

MechanismConfig MechanismFor(const RunConfig& config, PrivacyMode mode) {
  MechanismConfig m;
  m.epsilon = config.epsilon;
  m.delta = config.delta;
  m.cap = config.cap;
  m.mode = mode;
  m.seed = config.seed;
  return m;
}

json RunStamp(const RunConfig& config, const Artifacts& artifacts) {
  return {{"config_hash", config.Hash()}, {"artifact_hash", artifacts.hash}};
}

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kHistogram ? "hist" : "dpsu";
}

absl::StatusOr<Task> ParseTask(std::string_view name) {
  if (name == "hist") return Task::kHistogram;
  if (name == "dpsu") return Task::kDpsu;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown task '", S(name), "' (expected hist or dpsu)"));
}

absl::Status RunConfig::Validate() const {
  if (messages_path.has_value() == synthetic.has_value()) {
    return absl::InvalidArgumentError(
        "exactly one of a messages file and a synthetic spec must be set");
  }
  if (lists_path && !messages_path) {
    return absl::InvalidArgumentError(
        "a list table only applies to a messages file");
  }
  if (synthetic) RETURN_IF_ERROR(synthetic->Validate());
  MechanismConfig m = MechanismFor(*this, PrivacyMode::kEdge);
  RETURN_IF_ERROR(m.Validate());
  if (dpsu_delta && !(*dpsu_delta > 0.0 && *dpsu_delta < 0.5)) {
    return absl::InvalidArgumentError("dpsu_delta must be in (0, 0.5)");
  }
  if (modes.empty()) return absl::InvalidArgumentError("no modes given");
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (binomial_deg && *binomial_deg < 1) {
    return absl::InvalidArgumentError("binomial_deg must be >= 1");
  }
  if (fit_properties < 1 || fit.sample_cap < 1 || fit.observation_cap < 1 ||
      fit.fraction_bins < 1) {
    return absl::InvalidArgumentError("fit parameters must be positive");
  }
  if (attack_targets < 1) {
    return absl::InvalidArgumentError("attack_targets must be >= 1");
  }
  return absl::OkStatus();
}

json RunConfig::ToJson() const {
  json modes_json = json::array();
  for (PrivacyMode m : modes) modes_json.push_back(PrivacyModeName(m));
  return {
      {"messages", messages_path ? json(*messages_path) : json()},
      {"lists", lists_path ? json(*lists_path) : json()},
      {"vocabulary", vocabulary_path ? json(*vocabulary_path) : json()},
      {"synthetic", synthetic ? synthetic->ToJson() : json()},
      {"cap", cap},
      {"epsilon", epsilon},
      {"delta", delta},
      {"dpsu_delta", dpsu_delta ? json(*dpsu_delta) : json()},
      {"modes", modes_json},
      {"seed", seed},
      {"trials", trials},
      {"binomial_deg", binomial_deg ? json(*binomial_deg) : json()},
      {"fit",
       {{"properties", fit_properties},
        {"sample_cap", fit.sample_cap},
        {"observation_cap", fit.observation_cap},
        {"fraction_bins", fit.fraction_bins}}},
      {"attack",
       {{"model", ModelKindName(attack_model)}, {"targets", attack_targets}}},
  };
}

absl::StatusOr<RunConfig> RunConfig::FromJson(const json& j) {
  static const std::set<std::string> kKeys = {
      "messages", "lists",  "vocabulary", "synthetic",    "cap", "epsilon", "delta",
      "dpsu_delta", "modes", "seed", "trials", "binomial_deg", "fit",
      "attack", "out"};
  if (!j.is_object()) {
    return absl::InvalidArgumentError("config must be a JSON object");
  }
  for (const auto& [key, _] : j.items()) {
    if (!kKeys.contains(key)) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown config key '", key, "'"));
    }
  }
  RunConfig c;
  auto opt_string = [&](const char* key,
                        std::optional<std::string>* out) -> absl::Status {
    if (j.contains(key) && !j.at(key).is_null()) {
      if (!j.at(key).is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat("config key '", key, "' must be a string"));
      }
      *out = j.at(key).get<std::string>();
    }
    return absl::OkStatus();
  };
  RETURN_IF_ERROR(opt_string("messages", &c.messages_path));
  RETURN_IF_ERROR(opt_string("lists", &c.lists_path));
  RETURN_IF_ERROR(opt_string("vocabulary", &c.vocabulary_path));
  if (j.contains("synthetic") && !j.at("synthetic").is_null()) {
    ASSIGN_OR_RETURN(SyntheticSpec spec, SyntheticSpec::FromJson(j.at("synthetic")));
    c.synthetic = spec;
  }
  RETURN_IF_ERROR(Get(j, "cap", &c.cap));
  RETURN_IF_ERROR(Get(j, "epsilon", &c.epsilon));
  RETURN_IF_ERROR(Get(j, "delta", &c.delta));
  if (j.contains("dpsu_delta") && !j.at("dpsu_delta").is_null()) {
    double d = 0.0;
    RETURN_IF_ERROR(Get(j, "dpsu_delta", &d));
    c.dpsu_delta = d;
  }
  if (j.contains("modes")) {
    std::vector<std::string> names;
    RETURN_IF_ERROR(Get(j, "modes", &names));
    c.modes.clear();
    for (const auto& n : names) {
      ASSIGN_OR_RETURN(PrivacyMode m, ParsePrivacyMode(n));
      c.modes.push_back(m);
    }
  }
  RETURN_IF_ERROR(Get(j, "seed", &c.seed));
  RETURN_IF_ERROR(Get(j, "trials", &c.trials));
  if (j.contains("binomial_deg") && !j.at("binomial_deg").is_null()) {
    std::size_t d = 0;
    RETURN_IF_ERROR(Get(j, "binomial_deg", &d));
    c.binomial_deg = d;
  }
  if (j.contains("fit")) {
    const json& f = j.at("fit");
    RETURN_IF_ERROR(Get(f, "properties", &c.fit_properties));
    RETURN_IF_ERROR(Get(f, "sample_cap", &c.fit.sample_cap));
    RETURN_IF_ERROR(Get(f, "observation_cap", &c.fit.observation_cap));
    RETURN_IF_ERROR(Get(f, "fraction_bins", &c.fit.fraction_bins));
  }
  if (j.contains("attack")) {
    const json& a = j.at("attack");
    std::string model = S(ModelKindName(c.attack_model));
    RETURN_IF_ERROR(Get(a, "model", &model));
    ASSIGN_OR_RETURN(c.attack_model, ParseModelKind(model));
    RETURN_IF_ERROR(Get(a, "targets", &c.attack_targets));
  }
  if (j.contains("out")) {
    std::string out;
    RETURN_IF_ERROR(Get(j, "out", &out));
    c.out = out;
  }
  return c;
}

std::string RunConfig::Hash() const { return Sha256Hex(ToJson().dump()); }

absl::StatusOr<RunConfig> LoadRunConfig(const fs::path& path) {
  ASSIGN_OR_RETURN(json j, ReadJsonFile(path));
  return RunConfig::FromJson(j);
}

absl::StatusOr<Artifacts> LoadArtifacts(const fs::path& dir) {
  ASSIGN_OR_RETURN(std::string hash, HashArtifactFiles(dir));
  ASSIGN_OR_RETURN(json stats, ReadJsonFile(dir / kStatsFile));
  if (stats.value("artifact_hash", std::string()) != hash) {
    return absl::FailedPreconditionError(absl::StrCat(
        (dir / kStatsFile).string(),
        " does not match the graph/labeling files; rerun ingest"));
  }
  std::ifstream gin(dir / kGraphFile);
  ASSIGN_OR_RETURN(OrgGraph graph, ReadEdgeList(gin));
  std::ifstream vin(dir / kVocabularyFile);
  ASSIGN_OR_RETURN(std::vector<std::string> vocab, ReadVocabulary(vin));
  std::ifstream lin(dir / kLabelingFile);
  ASSIGN_OR_RETURN(PropertyLabeling labeling,
                   ReadLabeling(graph, lin, std::move(vocab),
                                stats.value("cap", std::size_t{1})));
  return Artifacts{std::move(graph), std::move(labeling), std::move(hash)};
}

absl::Status CmdSynth(const RunConfig& config) {
  SyntheticSpec spec = config.synthetic.value_or(SyntheticSpec{});
  ASSIGN_OR_RETURN(SyntheticCorpus corpus, GenerateSynthetic(spec));
  std::ostringstream messages;
  WriteMessagesJsonl(corpus.messages, messages);
  RETURN_IF_ERROR(WriteFile(config.out / "messages.jsonl", messages.str()));
  json lists = json::object();
  for (const auto& [id, members] : corpus.lists) lists[id] = members;
  RETURN_IF_ERROR(WriteJsonFile(config.out / "lists.json", lists));
  return WriteJsonFile(config.out / "synthetic_spec.json", spec.ToJson());
}

absl::Status CmdIngest(const RunConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  ListTable lists;
  bool have_lists = false;
  ASSIGN_OR_RETURN(std::vector<Message> raw,
                   LoadMessages(config, &lists, &have_lists));
  ASSIGN_OR_RETURN(std::vector<Message> messages,
                   ExpandLists(std::move(raw), have_lists ? &lists : nullptr));
  ASSIGN_OR_RETURN(OrgGraph graph, BuildGraphFromMessages(messages));
  ASSIGN_OR_RETURN(PropertyLabeling observed,
                   LabelEdges(graph, messages, config.cap));
  std::vector<std::string> domain;
  if (config.synthetic) {
    for (std::size_t r = 0; r < config.synthetic->vocabulary_size; ++r) {
      domain.push_back(SyntheticWord(r));
    }
  }
  if (config.vocabulary_path) {
    std::ifstream vin(*config.vocabulary_path);
    if (!vin) {
      return absl::NotFoundError(
          absl::StrCat("cannot open ", *config.vocabulary_path));
    }
    std::string line;
    while (std::getline(vin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) domain.push_back(line);
    }
  }
  ASSIGN_OR_RETURN(PropertyLabeling labeling, observed.WithVocabulary(domain));

  std::ostringstream g, l, v;
  WriteEdgeList(graph, g);
  WriteLabeling(graph, labeling, l);
  WriteVocabulary(labeling, v);
  RETURN_IF_ERROR(WriteFile(config.out / kGraphFile, g.str()));
  RETURN_IF_ERROR(WriteFile(config.out / kLabelingFile, l.str()));
  RETURN_IF_ERROR(WriteFile(config.out / kVocabularyFile, v.str()));
  ASSIGN_OR_RETURN(std::string hash, HashArtifactFiles(config.out));
  json stats = GraphStatsJson(graph, labeling);
  stats["messages"] = messages.size();
  stats["artifact_hash"] = hash;
  stats["config_hash"] = config.Hash();
  return WriteJsonFile(config.out / kStatsFile, stats);
}

absl::Status CmdSensitivity(const RunConfig& config, ModelKind kind) {
  RETURN_IF_ERROR(config.Validate());
  ASSIGN_OR_RETURN(Artifacts a, LoadArtifacts(config.out));
  const std::size_t n_max = a.graph.stats().max_neighborhood;
  const FitOptions options = FitOptionsFor(config);
  const std::vector<TokenId> properties =
      SampleProperties(a.labeling, config.fit_properties, config.seed);
  json model_json;
  SensitivityReport report;
  switch (kind) {
    case ModelKind::kConditional: {
      ASSIGN_OR_RETURN(ConditionalModel m,
                       FitConditional(a.graph, a.labeling, properties, options));
      ASSIGN_OR_RETURN(report, ComputeWConditional(m, n_max));
      model_json = m.ToJson();
      break;
    }
    case ModelKind::kGlobal: {
      ASSIGN_OR_RETURN(GlobalModel m,
                       FitGlobal(a.graph, a.labeling, properties, options));
      ASSIGN_OR_RETURN(report, ComputeWGlobal(m, n_max));
      model_json = m.ToJson();
      break;
    }
    case ModelKind::kBinomial: {
      ASSIGN_OR_RETURN(BinomialModel m,
                       FitBinomial(a.graph, a.labeling, properties, options));
      ASSIGN_OR_RETURN(report, ComputeWBinomial(
                                   m, config.binomial_deg.value_or(n_max), n_max));
      model_json = m.ToJson();
      break;
    }
  }
  const std::string name = S(ModelKindName(kind));
  const json prov = RunStamp(config, a);
  json model_doc = {{"model", model_json}, {"fit_hash", FitHash(config)}};
  model_doc.update(prov);
  RETURN_IF_ERROR(
      WriteJsonFile(config.out / absl::StrCat("model_", name, ".json"), model_doc));
  std::ostringstream csv;
  report.WriteCsv(csv);
  RETURN_IF_ERROR(WriteFile(
      config.out / absl::StrCat("sensitivity_", name, ".csv"), csv.str()));
  json doc = {{"report", report.ToJson()}, {"fit_hash", FitHash(config)}};
  doc.update(prov);
  return WriteJsonFile(config.out / SensitivityJsonName(kind), doc);
}

absl::StatusOr<SensitivityReport> LoadSensitivityReport(
    const RunConfig& config, const Artifacts& artifacts, ModelKind kind) {
  auto doc = LoadChecked(config, artifacts, SensitivityJsonName(kind));
  if (!doc.ok()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "mode needs a ", S(ModelKindName(kind)),
        " sensitivity report: ", doc.status().message()));
  }
  if (doc->value("fit_hash", std::string()) != FitHash(config)) {
    return absl::FailedPreconditionError(absl::StrCat(
        SensitivityJsonName(kind),
        " is stale: it was fitted under other fit settings; rerun "
        "sensitivity"));
  }
  return SensitivityReport::FromJson(doc->at("report"));
}

absl::Status CmdRun(const RunConfig& config, Task task) {
  RETURN_IF_ERROR(config.Validate());
  ASSIGN_OR_RETURN(Artifacts a, LoadArtifacts(config.out));
  ASSIGN_OR_RETURN(SensitivitySource source, SourceFor(config, a));
  std::ostringstream csv;
  if (task == Task::kHistogram) {
    csv << "mode,W,lambda,yield,yield_pct,rmse,yield_std,rmse_std,rmse_raw,"
           "seed,trials\n";
  } else {
    csv << "mode,W,mean_yield,std,lambda,threshold,delta,seed,trials\n";
  }
  json rows = json::array();
  for (PrivacyMode mode : config.modes) {
    ASSIGN_OR_RETURN(NoiseScale noise,
                     Calibrate(MechanismFor(config, mode), source));
    const std::vector<double> counts =
        CountsForMode(a.graph, a.labeling, mode, config.cap);
    json row = {{"noise", noise.ToJson()}, {"trials", config.trials}};
    if (task == Task::kHistogram) {
      std::vector<double> yields, pct, rmse, raw;
      for (std::size_t t = 0; t < config.trials; ++t) {
        HistogramResult r = ReleaseHistogram(counts, noise, t);
        yields.push_back(static_cast<double>(r.yield));
        pct.push_back(100.0 * r.yield_fraction);
        rmse.push_back(r.rmse_clipped);
        raw.push_back(r.rmse_raw);
      }
      TrialSummary y = Summarize(yields), p = Summarize(pct),
                   e = Summarize(rmse), w = Summarize(raw);
      csv << absl::StrJoin(
                 std::vector<std::string>{
                     S(PrivacyModeName(mode)), Num(noise.w), Num(noise.lambda),
                     Num(y.mean), Num(p.mean), Num(e.mean), Num(y.std),
                     Num(e.std), Num(w.mean), absl::StrCat(config.seed),
                     absl::StrCat(config.trials)},
                 ",")
          << "\n";
      row.update({{"yield", y.values},
                  {"mean_yield", y.mean},
                  {"yield_std", y.std},
                  {"yield_pct", p.mean},
                  {"rmse", e.mean},
                  {"rmse_std", e.std},
                  {"rmse_raw", w.mean},
                  {"vocabulary", counts.size()}});
    } else {
      const std::size_t records = mode == PrivacyMode::kNode
                                      ? a.graph.node_count()
                                      : a.graph.edge_count();
      const double delta = config.dpsu_delta.value_or(DefaultDpsuDelta(records));
      ASSIGN_OR_RETURN(TrialSummary y,
                       RepeatDpsu(counts, noise, delta, config.trials));
      const double threshold = DpsuThreshold(noise.lambda, delta);
      csv << absl::StrJoin(
                 std::vector<std::string>{
                     S(PrivacyModeName(mode)), Num(noise.w), Num(y.mean),
                     Num(y.std), Num(noise.lambda), Num(threshold), Num(delta),
                     absl::StrCat(config.seed), absl::StrCat(config.trials)},
                 ",")
          << "\n";
      row.update({{"yield", y.values},
                  {"mean_yield", y.mean},
                  {"std", y.std},
                  {"threshold", threshold},
                  {"delta", delta}});
    }
    rows.push_back(std::move(row));
  }
  const std::string name = S(TaskName(task));
  RETURN_IF_ERROR(
      WriteFile(config.out / absl::StrCat("run_", name, ".csv"), csv.str()));
  json doc = {{"task", name}, {"rows", rows}};
  doc.update(RunStamp(config, a));
  return WriteJsonFile(config.out / absl::StrCat("run_", name, ".json"), doc);
}

absl::Status CmdAttack(const RunConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  ASSIGN_OR_RETURN(Artifacts a, LoadArtifacts(config.out));
  if (a.labeling.vocabulary_size() == 0) {
    return absl::FailedPreconditionError("labeling has no properties to attack");
  }
  TokenId property = 0;
  for (TokenId t = 1; t < a.labeling.vocabulary_size(); ++t) {
    if (a.labeling.freq(t) > a.labeling.freq(property)) property = t;
  }
  // The model is fitted without the attacked property.
  std::vector<TokenId> properties =
      SampleProperties(a.labeling, config.fit_properties + 1, config.seed);
  std::erase(properties, property);
  if (properties.size() > config.fit_properties) {
    properties.resize(config.fit_properties);
  }
  const FitOptions options = FitOptionsFor(config);
  CorrelationModel model;
  switch (config.attack_model) {
    case ModelKind::kConditional: {
      ASSIGN_OR_RETURN(ConditionalModel m,
                       FitConditional(a.graph, a.labeling, properties, options));
      model = std::move(m);
      break;
    }
    case ModelKind::kGlobal: {
      ASSIGN_OR_RETURN(GlobalModel m,
                       FitGlobal(a.graph, a.labeling, properties, options));
      model = std::move(m);
      break;
    }
    case ModelKind::kBinomial: {
      ASSIGN_OR_RETURN(BinomialModel m,
                       FitBinomial(a.graph, a.labeling, properties, options));
      model = std::move(m);
      break;
    }
  }
  SensitivitySource source;
  source.stats = a.graph.stats();
  ASSIGN_OR_RETURN(NoiseScale edge_noise,
                   Calibrate(MechanismFor(config, PrivacyMode::kEdge), source));
  ASSIGN_OR_RETURN(double noise,
                   LaplaceSample(edge_noise.lambda,
                                 NoiseStream(config.seed, "attack", property), 0));
  const ReleasedCount release{
      static_cast<double>(a.labeling.freq(property)) + noise, edge_noise.lambda};
  const std::vector<EdgeIndex> targets =
      SampleTargets(a.graph, config.attack_targets, config.seed);
  ASSIGN_OR_RETURN(AttackReport report,
                   EvaluateAttack(a.graph, a.labeling, model, property, targets,
                                  release));
  json doc = {{"model", ModelKindName(config.attack_model)},
              {"property_token", a.labeling.token(property)},
              {"release", {{"value", release.value}, {"noise", edge_noise.ToJson()}}},
              {"report", report.ToJson()}};
  doc.update(RunStamp(config, a));
  return WriteJsonFile(
      config.out /
          absl::StrCat("attack_", S(ModelKindName(config.attack_model)), ".json"),
      doc);
}

absl::Status CmdReport(const RunConfig& config) {
  ASSIGN_OR_RETURN(Artifacts a, LoadArtifacts(config.out));
  ASSIGN_OR_RETURN(json stats, ReadJsonFile(config.out / kStatsFile));
  json report = {{"stats", stats}};
  report.update(RunStamp(config, a));
  std::ostringstream md;
  md << "# Run report\n\n";
  md << absl::StrFormat(
      "Graph: %d nodes, %d edges, D_max %d, N_max %d, vocabulary %d.\n\n",
      a.graph.node_count(), a.graph.edge_count(), a.graph.stats().max_degree,
      a.graph.stats().max_neighborhood, a.labeling.vocabulary_size());

  json sens = json::object();
  for (ModelKind k :
       {ModelKind::kBinomial, ModelKind::kGlobal, ModelKind::kConditional}) {
    if (!fs::exists(config.out / SensitivityJsonName(k))) continue;
    ASSIGN_OR_RETURN(SensitivityReport r, LoadSensitivityReport(config, a, k));
    sens[S(ModelKindName(k))] = r.w;
  }
  if (!sens.empty()) {
    report["sensitivity"] = sens;
    md << "## Fitted W\n\n| model | W |\n|---|---|\n";
    for (const auto& [k, w] : sens.items()) {
      md << "| " << k << " | " << Num(w.get<double>()) << " |\n";
    }
    md << "\n";
  }
  for (Task task : {Task::kHistogram, Task::kDpsu}) {
    const std::string name = absl::StrCat("run_", S(TaskName(task)), ".json");
    if (!fs::exists(config.out / name)) continue;
    ASSIGN_OR_RETURN(json run, LoadChecked(config, a, name));
    report[absl::StrCat("run_", S(TaskName(task)))] = run.at("rows");
    if (task == Task::kHistogram) {
      md << "## Histogram release\n\n| mode | W | lambda | yield | yield % | "
            "RMSE |\n|---|---|---|---|---|---|\n";
      for (const json& r : run.at("rows")) {
        md << "| " << r["noise"]["mode"].get<std::string>() << " | "
           << Num(r["noise"]["W"]) << " | " << Num(r["noise"]["lambda"])
           << " | " << Num(r["mean_yield"]) << " | " << Num(r["yield_pct"])
           << " | " << Num(r["rmse"]) << " |\n";
      }
    } else {
      md << "## Set union\n\n| mode | W | E[yield] | std |\n|---|---|---|---|\n";
      for (const json& r : run.at("rows")) {
        md << "| " << r["noise"]["mode"].get<std::string>() << " | "
           << Num(r["noise"]["W"]) << " | " << Num(r["mean_yield"]) << " | "
           << Num(r["std"]) << " |\n";
      }
    }
    md << "\n";
  }
  for (ModelKind k :
       {ModelKind::kBinomial, ModelKind::kGlobal, ModelKind::kConditional}) {
    const std::string name =
        absl::StrCat("attack_", S(ModelKindName(k)), ".json");
    if (!fs::exists(config.out / name)) continue;
    ASSIGN_OR_RETURN(json attack, LoadChecked(config, a, name));
    const json& r = attack.at("report");
    report[absl::StrCat("attack_", S(ModelKindName(k)))] = {
        {"property", attack.at("property_token")},
        {"prior", r.at("prior")},
        {"auc", r.at("auc")},
        {"accuracy", r.at("accuracy")},
        {"auc_with_release", r.value("auc_with_release", json())},
        {"accuracy_with_release", r.value("accuracy_with_release", json())}};
    md << "## Attribute disclosure (" << S(ModelKindName(k)) << " model)\n\n"
       << "Property '" << attack.at("property_token").get<std::string>()
       << "', prior " << Num(r.at("prior")) << ": AUC " << Num(r.at("auc"))
       << ", accuracy " << Num(r.at("accuracy"));
    if (r.contains("auc_with_release")) {
      md << "; with the edge-level release: AUC "
         << Num(r.at("auc_with_release")) << ", accuracy "
         << Num(r.at("accuracy_with_release"));
    }
    md << ".\n\n";
  }
  RETURN_IF_ERROR(WriteJsonFile(config.out / "report.json", report));
  return WriteFile(config.out / "report.md", md.str());
}

absl::Status CmdAll(const RunConfig& config) {
  RETURN_IF_ERROR(CmdIngest(config));
  for (ModelKind k :
       {ModelKind::kConditional, ModelKind::kGlobal, ModelKind::kBinomial}) {
    RETURN_IF_ERROR(CmdSensitivity(config, k));
  }
  RETURN_IF_ERROR(CmdRun(config, Task::kHistogram));
  RETURN_IF_ERROR(CmdRun(config, Task::kDpsu));
  RETURN_IF_ERROR(CmdAttack(config));
  return CmdReport(config);
}

}  // namespace pfgraph
