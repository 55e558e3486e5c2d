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


#include "netstate/metrics.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "json_util.h"
#include "netstate/sql.h"
#include "netstate/sql_lexer.h"

namespace netstate {
namespace {

using internal::Json;

void Visit(const sql::SelectStatement& s, Identifiers& ids) {
  for (const auto& p : s.where) {
    const auto* text = std::get_if<std::string>(&p.literal);
    if (!ids.sfc && p.column == "sfc_type" && p.op == sql::CompareOp::kEq && text) {
      try {
        ids.sfc = std::string(SfcName(ParseSfcType(*text)));
      } catch (const UnknownNameError&) {
        ids.sfc = *text;
      }
    }
  }
  if (!ids.vnf && s.from_table == "vnf_instances") {
    bool idle = false;
    std::optional<std::string> dc;
    for (const auto& p : s.where) {
      if (p.op != sql::CompareOp::kEq) continue;
      const auto* text = std::get_if<std::string>(&p.literal);
      const auto* num = std::get_if<Decimal>(&p.literal);
      if (p.column == "status" && text && *text == "idle") idle = true;
      if (p.column == "dc_id" && num) dc = num->ToString();
    }
    if (idle) ids.vnf = "vnf_instances:status=idle" + (dc ? ":dc_id=" + *dc : std::string());
  }
  for (const auto& proj : s.projections) {
    if (const auto* sub = std::get_if<sql::Subquery>(&proj.expr)) Visit(sub->select(), ids);
  }
}

std::optional<sql::QueryResult> TryRun(std::string_view text, const RelationalStore& store) {
  try {
    return sql::Execute(sql::Parse(text), store);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string Percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", fraction * 100.0);
  return buf;
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

Identifiers ExtractIdentifiers(std::string_view sql_text) {
  Identifiers ids;
  try {
    Visit(sql::Parse(sql_text), ids);
  } catch (const sql::SqlError&) {
  }
  return ids;
}

IdentifierPair MakePair(std::string_view gold_sql, std::string_view predicted_sql) {
  Identifiers gold = ExtractIdentifiers(gold_sql);
  Identifiers pred = ExtractIdentifiers(predicted_sql);
  return {gold.sfc, pred.sfc, gold.vnf, pred.vnf};
}

int PenaltySfc(const IdentifierPair& pair) {
  return pair.expected_sfc == pair.predicted_sfc ? 0 : 1;
}

int PenaltyVnf(const IdentifierPair& pair) {
  return pair.expected_vnf == pair.predicted_vnf ? 0 : 1;
}

Penalties BatchPenalties(std::span<const IdentifierPair> pairs) {
  if (pairs.empty()) throw EvalError("penalties need at least one example");
  size_t s = 0;
  size_t v = 0;
  for (const auto& p : pairs) {
    s += PenaltySfc(p);
    v += PenaltyVnf(p);
  }
  const double n = static_cast<double>(pairs.size());
  return {static_cast<double>(s) / n, static_cast<double>(v) / n};
}

void LossWeights::Validate() const {
  for (double w : {lambda_ce, lambda_s, lambda_v}) {
    if (!(w >= 0.0 && w <= 1.0)) throw EvalError("loss weights must lie in [0, 1]");
  }
  const double sum = lambda_ce + lambda_s + lambda_v;
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw EvalError("loss weights must sum to 1, got " + std::to_string(sum));
  }
}

double CombinedLoss(double l_ce, double p_s, double p_v, const LossWeights& weights) {
  weights.Validate();
  if (!(l_ce >= 0.0)) throw EvalError("cross-entropy loss must be non-negative");
  return weights.lambda_ce * l_ce + weights.lambda_s * p_s + weights.lambda_v * p_v;
}

bool ExactMatch(std::string_view predicted_sql, std::string_view gold_sql) {
  try {
    return sql::Normalize(predicted_sql) == sql::Normalize(gold_sql);
  } catch (const sql::SqlError&) {
    return false;
  }
}

bool ExecutionMatch(std::string_view predicted_sql, std::string_view gold_sql,
                    const RelationalStore& store) {
  auto pred = TryRun(predicted_sql, store);
  if (!pred) return false;
  auto gold = TryRun(gold_sql, store);
  return gold && sql::SameBag(*pred, *gold);
}

double Perplexity(std::span<const double> nll_per_token) {
  if (nll_per_token.empty()) throw EvalError("perplexity needs at least one token");
  double sum = 0;
  for (double x : nll_per_token) {
    if (!(x >= 0.0)) throw EvalError("token NLL must be non-negative");
    sum += x;
  }
  return std::exp(sum / static_cast<double>(nll_per_token.size()));
}

std::optional<std::string> RecoverSql(std::string_view raw) {
  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  for (size_t i = 0; i + 6 <= raw.size(); ++i) {
    if (i > 0 && is_word(raw[i - 1])) continue;
    bool hit = true;
    for (size_t k = 0; k < 6; ++k) {
      if (std::tolower(static_cast<unsigned char>(raw[i + k])) != "select"[k]) {
        hit = false;
        break;
      }
    }
    if (!hit || (i + 6 < raw.size() && is_word(raw[i + 6]))) continue;

    std::string_view rest = raw.substr(i);
    const auto tokens = sql::LexPrefix(rest);
    for (size_t n = tokens.size(); n > 0; --n) {
      std::string_view candidate = rest.substr(0, tokens[n - 1].end);
      try {
        return sql::Render(sql::Parse(candidate));
      } catch (const sql::SqlError&) {
      }
    }
  }
  return std::nullopt;
}

std::string PredictionToJsonLine(const Prediction& prediction) {
  Json j;
  j["id"] = prediction.id;
  j["raw_output"] = prediction.raw_output;
  if (prediction.token_nll) j["token_nll"] = *prediction.token_nll;
  return j.dump();
}

Prediction PredictionFromJsonLine(std::string_view line) {
  Prediction p;
  try {
    Json j = Json::parse(line);
    auto id = j.find("id");
    if (id == j.end() || !id->is_number_unsigned()) {
      throw EvalError("prediction without a non-negative integer id");
    }
    p.id = id->get<size_t>();
    p.raw_output = internal::Field<std::string>(j, "raw_output");
    if (auto it = j.find("token_nll"); it != j.end() && !it->is_null()) {
      p.token_nll = it->get<std::vector<double>>();
    }
  } catch (const Json::exception& e) {
    throw EvalError(std::string("malformed prediction line: ") + e.what());
  } catch (const ConfigError& e) {
    throw EvalError(std::string("malformed prediction line: ") + e.what());
  }
  return p;
}

void WritePredictions(const std::filesystem::path& path, std::span<const Prediction> predictions) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  for (const auto& p : predictions) out << PredictionToJsonLine(p) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<Prediction> ReadPredictions(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<Prediction> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(PredictionFromJsonLine(line));
  }
  return out;
}

EvalReport Score(std::span<const Prediction> predictions, std::span<const QueryRecord> corpus,
                 const ScoreOptions& options) {
  options.weights.Validate();
  if (predictions.empty()) throw EvalError("no predictions to score");

  std::set<size_t> seen;
  for (const auto& p : predictions) {
    if (p.id >= corpus.size()) {
      throw EvalError("prediction id " + std::to_string(p.id) + " is not in the corpus");
    }
    if (!seen.insert(p.id).second) {
      throw EvalError("duplicate prediction id " + std::to_string(p.id));
    }
    if (options.split && corpus[p.id].split != *options.split) {
      throw EvalError("prediction id " + std::to_string(p.id) + " is not in the " +
                      std::string(SplitName(*options.split)) + " split");
    }
  }
  if (options.split) {
    for (size_t id = 0; id < corpus.size(); ++id) {
      if (corpus[id].split == *options.split && !seen.count(id)) {
        throw EvalError("missing prediction for id " + std::to_string(id));
      }
    }
  }

  std::map<int64_t, size_t> step_index;
  for (size_t i = 0; i < options.trajectory.size(); ++i) {
    step_index[options.trajectory[i].time_step] = i;
  }
  std::map<size_t, RelationalStore> stores;

  EvalReport report;
  report.total = predictions.size();
  std::vector<IdentifierPair> pairs;
  pairs.reserve(predictions.size());
  size_t exec_correct = 0;
  std::vector<double> nll;
  bool all_nll = true;
  for (const auto& p : predictions) {
    const QueryRecord& gold = corpus[p.id];
    std::string predicted = p.raw_output;
    if (options.recover) {
      if (auto sql_text = RecoverSql(p.raw_output)) {
        // Count only outputs the plain normalizer would not have accepted
        // unchanged.
        std::optional<std::string> plain;
        try {
          plain = sql::Normalize(p.raw_output);
        } catch (const sql::SqlError&) {
        }
        if (plain != *sql_text) ++report.recovered;
        predicted = *sql_text;
      }
    }
    if (ExactMatch(predicted, gold.sql)) ++report.correct;
    pairs.push_back(MakePair(gold.sql, predicted));
    if (!options.trajectory.empty()) {
      auto it = step_index.find(gold.step);
      if (it == step_index.end()) {
        throw EvalError("trajectory has no snapshot for step " + std::to_string(gold.step));
      }
      auto store = stores.find(it->second);
      if (store == stores.end()) {
        store = stores.emplace(it->second,
                               RelationalStore::Ingest(options.trajectory[it->second])).first;
      }
      if (ExecutionMatch(predicted, gold.sql, store->second)) ++exec_correct;
    }
    if (p.token_nll && !p.token_nll->empty()) {
      nll.insert(nll.end(), p.token_nll->begin(), p.token_nll->end());
    } else {
      all_nll = false;
    }
  }

  const double n = static_cast<double>(report.total);
  report.accuracy = static_cast<double>(report.correct) / n;
  if (!options.trajectory.empty()) report.exec_match = static_cast<double>(exec_correct) / n;
  Penalties pen = BatchPenalties(pairs);
  report.p_s = pen.p_s;
  report.p_v = pen.p_v;
  if (all_nll) {
    report.perplexity = Perplexity(nll);
    report.ce_loss = std::accumulate(nll.begin(), nll.end(), 0.0) / static_cast<double>(nll.size());
  }
  if (options.ce_loss) report.ce_loss = *options.ce_loss;
  if (report.ce_loss) {
    report.combined_loss = CombinedLoss(*report.ce_loss, report.p_s, report.p_v, options.weights);
  }
  return report;
}

std::string ReportToJson(const EvalReport& report) {
  Json j;
  j["accuracy"] = report.accuracy;
  j["correct"] = report.correct;
  j["total"] = report.total;
  j["exec_match"] = report.exec_match ? Json(*report.exec_match) : Json(nullptr);
  j["p_s"] = report.p_s;
  j["p_v"] = report.p_v;
  j["ce_loss"] = report.ce_loss ? Json(*report.ce_loss) : Json(nullptr);
  j["combined_loss"] = report.combined_loss ? Json(*report.combined_loss) : Json(nullptr);
  j["perplexity"] = report.perplexity ? Json(*report.perplexity) : Json(nullptr);
  j["recovered"] = report.recovered;
  return j.dump(2);
}

std::string ReportToTable(const EvalReport& report, std::string_view label) {
  std::string out = "Metric\t" + std::string(label) + "\n";
  auto row = [&](std::string_view name, const std::string& value) {
    out += std::string(name) + "\t" + value + "\n";
  };
  auto opt = [](const std::optional<double>& v) { return v ? Fixed(*v) : std::string("-"); };
  row("Accuracy (%)", Percent(report.accuracy));
  row("Correct", std::to_string(report.correct));
  row("Total", std::to_string(report.total));
  row("Execution match (%)", report.exec_match ? Percent(*report.exec_match) : "-");
  row("P_S", Fixed(report.p_s));
  row("P_V", Fixed(report.p_v));
  row("Cross-entropy", opt(report.ce_loss));
  row("Combined loss", opt(report.combined_loss));
  row("Perplexity", opt(report.perplexity));
  row("Recovered", std::to_string(report.recovered));
  return out;
}

}  // namespace netstate
