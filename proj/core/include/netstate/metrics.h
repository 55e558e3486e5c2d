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


#ifndef NETSTATE_METRICS_H_
#define NETSTATE_METRICS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netstate/dataset.h"
#include "netstate/error.h"
#include "netstate/network_state.h"
#include "netstate/store.h"

namespace netstate {

class EvalError : public Error {
 public:
  using Error::Error;
};

struct IdentifierPair {
  std::optional<std::string> expected_sfc;
  std::optional<std::string> predicted_sfc;
  std::optional<std::string> expected_vnf;
  std::optional<std::string> predicted_vnf;
};

struct Identifiers {
  std::optional<std::string> sfc;  // canonical SFC name from sfc_type = '...'
  std::optional<std::string> vnf;  // "vnf_instances:status=idle[:dc_id=N]"
};

// Reads identifiers out of SQL text. Unparseable text has none.
Identifiers ExtractIdentifiers(std::string_view sql_text);
IdentifierPair MakePair(std::string_view gold_sql, std::string_view predicted_sql);

// 1 on mismatch; absent on both sides is a match.
int PenaltySfc(const IdentifierPair& pair);
int PenaltyVnf(const IdentifierPair& pair);

struct Penalties {
  double p_s = 0;
  double p_v = 0;
};
// Means over the batch. Throws EvalError on an empty batch.
Penalties BatchPenalties(std::span<const IdentifierPair> pairs);

struct LossWeights {
  double lambda_ce = 0.1;
  double lambda_s = 0.6;
  double lambda_v = 0.3;

  // Throws EvalError unless each weight is in [0, 1] and they sum to 1
  // within 1e-9.
  void Validate() const;
};

double CombinedLoss(double l_ce, double p_s, double p_v, const LossWeights& weights);

// Normalized text equality; false if either side does not parse.
bool ExactMatch(std::string_view predicted_sql, std::string_view gold_sql);
// Same multiset of result rows on `store`; false on any parse or
// execution failure.
bool ExecutionMatch(std::string_view predicted_sql, std::string_view gold_sql,
                    const RelationalStore& store);

// exp(mean nll). Throws EvalError on an empty list or a negative entry.
double Perplexity(std::span<const double> nll_per_token);

// First SELECT span in `raw` that parses, taken as long as possible, in
// normalized form.
std::optional<std::string> RecoverSql(std::string_view raw);

struct Prediction {
  size_t id = 0;
  std::string raw_output;
  std::optional<std::vector<double>> token_nll;
};

std::string PredictionToJsonLine(const Prediction& prediction);
Prediction PredictionFromJsonLine(std::string_view line);
void WritePredictions(const std::filesystem::path& path, std::span<const Prediction> predictions);
std::vector<Prediction> ReadPredictions(const std::filesystem::path& path);

struct ScoreOptions {
  bool recover = false;
  LossWeights weights;
  std::optional<double> ce_loss;        // defaults to the mean token NLL when known
  std::optional<Split> split;           // predictions must cover exactly this split
  std::span<const NetworkState> trajectory;  // enables execution match
};

struct EvalReport {
  double accuracy = 0;
  size_t correct = 0;
  size_t total = 0;
  std::optional<double> exec_match;
  double p_s = 0;
  double p_v = 0;
  std::optional<double> ce_loss;
  std::optional<double> combined_loss;
  std::optional<double> perplexity;
  size_t recovered = 0;  // predictions changed by recovery
};

// Throws EvalError on empty, duplicate, unknown or missing ids.
EvalReport Score(std::span<const Prediction> predictions, std::span<const QueryRecord> corpus,
                 const ScoreOptions& options);

std::string ReportToJson(const EvalReport& report);
// Two-column "Metric<TAB>Value" table.
std::string ReportToTable(const EvalReport& report, std::string_view label);

}  // namespace netstate

#endif  // NETSTATE_METRICS_H_
