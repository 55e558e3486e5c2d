// Copyright 2026 The Netstate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// netstate: simulate, ingest, gen-dataset, prune-schema, query, eval.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "netstate/baseline.h"
#include "netstate/dataset.h"
#include "netstate/metrics.h"
#include "netstate/network_state.h"
#include "netstate/placement.h"
#include "netstate/pruner.h"
#include "netstate/scenario.h"
#include "netstate/store.h"

namespace fs = std::filesystem;
using namespace netstate;

namespace {

struct SimulateArgs {
  std::string scenario;
  int horizon = -1;
  uint64_t seed = 0;
  std::string out;
};

struct IngestArgs {
  std::string traj;
  int64_t step = -1;
  std::string out;
};

struct GenArgs {
  std::string traj;
  size_t size = 16568;
  uint64_t seed = 0;
  size_t budget = kDefaultTokenBudget;
  std::string templates;
  std::string keywords;
  std::string out;
};

struct PruneArgs {
  std::string question;
  size_t budget = kDefaultTokenBudget;
  std::string keywords;
};

struct QueryArgs {
  std::string store;
  bool verbose = false;
  std::string in;
  std::string split;
  std::string out;
};

struct EvalArgs {
  std::string pred;
  std::string corpus;
  std::string traj;
  std::string split;
  bool recover = false;
  std::vector<double> weights;
  double ce_loss = -1;
  std::string format = "both";
  std::string label = "netstate";
};

const NetworkState& PickStep(const std::vector<NetworkState>& traj, int64_t step) {
  if (traj.empty()) throw Error("trajectory is empty");
  if (step < 0) return traj.back();
  for (const auto& s : traj) {
    if (s.time_step == step) return s;
  }
  throw Error("trajectory has no step " + std::to_string(step));
}

int RunSimulate(const SimulateArgs& a) {
  Scenario scenario = Scenario::Load(a.scenario);
  const int horizon = a.horizon >= 0 ? a.horizon : scenario.horizon;
  auto traj = Run(scenario, horizon, a.seed);
  for (const auto& s : traj) {
    auto problems = CheckInvariants(s);
    if (!problems.empty()) throw Error("step " + std::to_string(s.time_step) + ": " + problems[0]);
  }
  WriteTrajectory(a.out, traj);
  const auto& last = traj.back();
  std::cout << "steps " << traj.size() - 1 << ", vnf_instances " << last.vnf_instances.size()
            << ", sfc_requests " << last.sfc_requests.size() << "\n";
  return 0;
}

int RunIngest(const IngestArgs& a) {
  auto traj = ReadTrajectory(a.traj);
  RelationalStore store = RelationalStore::Ingest(PickStep(traj, a.step));
  store.WriteCsv(a.out);
  for (const auto& name : store.TableNames()) {
    std::cout << name << "\t" << store.table(name).size() << "\n";
  }
  return 0;
}

int RunGen(const GenArgs& a) {
  auto traj = ReadTrajectory(a.traj);
  std::optional<TemplateBank> bank;
  std::optional<KeywordMap> keywords;
  GenerateOptions opts;
  opts.target_size = a.size;
  opts.seed = a.seed;
  opts.budget_tokens = a.budget;
  if (!a.templates.empty()) opts.templates = &bank.emplace(TemplateBank::Load(a.templates));
  if (!a.keywords.empty()) opts.keywords = &keywords.emplace(KeywordMap::Load(a.keywords));
  auto records = Generate(traj, opts);
  WriteCorpus(a.out, records);
  size_t counts[3] = {0, 0, 0};
  for (const auto& r : records) ++counts[static_cast<int>(r.split)];
  std::cout << "train " << counts[0] << ", validation " << counts[1] << ", test " << counts[2]
            << "\n";
  return 0;
}

int RunPrune(const PruneArgs& a) {
  std::optional<KeywordMap> keywords;
  if (!a.keywords.empty()) keywords.emplace(KeywordMap::Load(a.keywords));
  PrunedSchema p = Prune(a.question, a.budget, keywords ? *keywords : KeywordMap::Default());
  std::cout << p.ddl << "\n";
  std::cout << "-- tokens: " << p.token_count << (p.full_schema_fallback ? " (full schema)" : "")
            << "\n";
  return 0;
}

bool EndsWith(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int RunQueryBatch(const QueryArgs& a) {
  std::vector<std::pair<size_t, std::string>> questions;
  if (EndsWith(a.in, ".jsonl")) {
    auto corpus = ReadCorpus(a.in);
    std::optional<Split> split;
    if (!a.split.empty()) split = ParseSplit(a.split);
    for (size_t id = 0; id < corpus.size(); ++id) {
      if (!split || corpus[id].split == *split) questions.emplace_back(id, corpus[id].question);
    }
  } else {
    if (!a.split.empty()) throw Error("--split needs a .jsonl corpus as --in");
    std::ifstream in(a.in);
    if (!in) throw Error("cannot open " + a.in);
    std::string line;
    for (size_t id = 0; std::getline(in, line); ++id) questions.emplace_back(id, line);
  }
  std::vector<Prediction> preds;
  size_t failed = 0;
  for (const auto& [id, q] : questions) {
    Prediction p;
    p.id = id;
    try {
      p.raw_output = sql::Render(Translate(q).stmt);
    } catch (const TranslateError& e) {
      ++failed;
      if (a.verbose) std::cerr << "id " << id << ": " << e.what() << "\n";
    }
    preds.push_back(std::move(p));
  }
  WritePredictions(a.out, preds);
  std::cout << "predictions " << preds.size() << ", untranslated " << failed << "\n";
  return 0;
}

int RunQueryConsole(const QueryArgs& a) {
  RelationalStore store = RelationalStore::ReadCsv(a.store);
  std::string line;
  while (true) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line == "quit" || line == "exit") break;
    try {
      Translation t = Translate(line);
      if (a.verbose) std::cout << sql::Render(t.stmt) << "\n";
      std::cout << sql::RenderAnswer(sql::Execute(t.stmt, store)) << "\n";
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

int RunEval(const EvalArgs& a) {
  auto preds = ReadPredictions(a.pred);
  auto corpus = ReadCorpus(a.corpus);
  std::vector<NetworkState> traj;
  if (!a.traj.empty()) traj = ReadTrajectory(a.traj);
  ScoreOptions opts;
  opts.recover = a.recover;
  opts.trajectory = traj;
  if (!a.split.empty()) opts.split = ParseSplit(a.split);
  if (!a.weights.empty()) {
    if (a.weights.size() != 3) throw Error("--weights takes three values: ce,s,v");
    opts.weights = {a.weights[0], a.weights[1], a.weights[2]};
  }
  if (a.ce_loss >= 0) opts.ce_loss = a.ce_loss;
  EvalReport report = Score(preds, corpus, opts);
  if (a.format == "json" || a.format == "both") std::cout << ReportToJson(report) << "\n";
  if (a.format == "table" || a.format == "both") std::cout << ReportToTable(report, a.label);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SFC/NFV network-state benchmark factory and evaluation harness", "netstate"};
  app.require_subcommand(1);
  int rc = 0;

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Run the placement simulator and write a trajectory");
  c_sim->add_option("--scenario", sim.scenario, "Scenario JSON")->required()->check(CLI::ExistingFile);
  c_sim->add_option("--horizon", sim.horizon, "Steps to simulate (default: scenario horizon)");
  c_sim->add_option("--seed", sim.seed, "RNG seed")->envname("NETSTATE_SEED");
  c_sim->add_option("--out", sim.out, "Trajectory JSONL")->required();
  c_sim->callback([&] { rc = RunSimulate(sim); });

  IngestArgs ing;
  auto* c_ing = app.add_subcommand("ingest", "Export one snapshot as CSV tables");
  c_ing->add_option("--traj", ing.traj, "Trajectory JSONL")->required()->check(CLI::ExistingFile);
  c_ing->add_option("--step", ing.step, "time_step to export (default: last)");
  c_ing->add_option("--out", ing.out, "Output directory")->required();
  c_ing->callback([&] { rc = RunIngest(ing); });

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen-dataset", "Generate the question/SQL/answer corpus");
  c_gen->add_option("--traj", gen.traj, "Trajectory JSONL")->required()->check(CLI::ExistingFile);
  c_gen->add_option("--size", gen.size, "Number of records (multiple of 8)");
  c_gen->add_option("--seed", gen.seed, "RNG seed")->envname("NETSTATE_SEED");
  c_gen->add_option("--budget", gen.budget, "Token budget for the schema context");
  c_gen->add_option("--templates", gen.templates, "Question template JSON")->check(CLI::ExistingFile);
  c_gen->add_option("--keywords", gen.keywords, "Schema keyword JSON")->check(CLI::ExistingFile);
  c_gen->add_option("--out", gen.out, "Corpus JSONL")->required();
  c_gen->callback([&] { rc = RunGen(gen); });

  PruneArgs pr;
  auto* c_pr = app.add_subcommand("prune-schema", "Print the pruned schema for a question");
  c_pr->add_option("--question", pr.question, "Question text")->required();
  c_pr->add_option("--budget", pr.budget, "Token budget");
  c_pr->add_option("--keywords", pr.keywords, "Schema keyword JSON")->check(CLI::ExistingFile);
  c_pr->callback([&] { rc = RunPrune(pr); });

  QueryArgs q;
  auto* c_q = app.add_subcommand("query", "Answer questions with the rule-based translator");
  c_q->add_option("--store", q.store, "CSV store directory (console mode)")->check(CLI::ExistingDirectory);
  c_q->add_flag("--verbose", q.verbose, "Print generated SQL");
  auto* in_opt = c_q->add_option("--in", q.in, "Questions: .txt (one per line) or corpus .jsonl")
                     ->check(CLI::ExistingFile);
  c_q->add_option("--split", q.split, "Corpus split to translate")->needs(in_opt);
  auto* out_opt = c_q->add_option("--out", q.out, "Predictions JSONL")->needs(in_opt);
  in_opt->needs(out_opt);
  c_q->callback([&] {
    if (!q.in.empty()) {
      rc = RunQueryBatch(q);
    } else {
      if (q.store.empty()) throw CLI::RequiredError("--store");
      rc = RunQueryConsole(q);
    }
  });

  EvalArgs ev;
  auto* c_ev = app.add_subcommand("eval", "Score predictions against a corpus");
  c_ev->add_option("--pred", ev.pred, "Predictions JSONL")->required()->check(CLI::ExistingFile);
  c_ev->add_option("--corpus", ev.corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  c_ev->add_option("--traj", ev.traj, "Trajectory JSONL for execution match")->check(CLI::ExistingFile);
  c_ev->add_option("--split", ev.split, "Require predictions for exactly this split");
  c_ev->add_flag("--recover", ev.recover, "Recover SQL from noisy outputs first");
  c_ev->add_option("--weights", ev.weights, "Loss weights ce,s,v")->delimiter(',');
  c_ev->add_option("--ce-loss", ev.ce_loss, "Cross-entropy loss to combine")->check(CLI::NonNegativeNumber);
  c_ev->add_option("--format", ev.format, "json, table or both")
      ->check(CLI::IsMember({"json", "table", "both"}));
  c_ev->add_option("--label", ev.label, "Column label in the table");
  c_ev->callback([&] { rc = RunEval(ev); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "netstate: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
