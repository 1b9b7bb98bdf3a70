// Copyright 2026 The qga Authors.
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

#ifndef QGA_SCORING_H_
#define QGA_SCORING_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qga/corpus.h"

namespace qga {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t tp = 0;
  std::size_t pred_count = 0;
  std::size_t gold_count = 0;
};

// Precision, recall and F1 from counts; each ratio is 0 when its
// denominator is 0.
Prf MakePrf(std::size_t tp, std::size_t pred_count, std::size_t gold_count);

struct TriggerUnit {
  std::string id;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string event_type;
};

struct ArgumentUnit {
  std::string id;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string event_type;
  std::string role;
  std::string surface;  // informational, not part of any match key
};

struct TriggerScores {
  Prf identification;   // (id, start, end)
  Prf classification;   // + event_type
};

struct ArgumentScores {
  Prf identification;   // Arg-I: (id, start, end, event_type)
  Prf classification;   // Arg-C: + role
};

// One-to-one exact-key matching: per key, min(#pred, #gold) matches.
TriggerScores ScoreTriggers(const std::vector<TriggerUnit> &pred,
                            const std::vector<TriggerUnit> &gold);
ArgumentScores ScoreArguments(const std::vector<ArgumentUnit> &pred,
                              const std::vector<ArgumentUnit> &gold);

struct ScoreReport {
  Prf trigger_id;
  Prf trigger_c;
  Prf arg_i;
  Prf arg_c;

  nlohmann::ordered_json ToJson() const;
  // Fixed-width table, percentages with two decimals.
  std::string ToTable() const;
};

ScoreReport Score(const std::vector<TriggerUnit> &pred_triggers,
                  const std::vector<TriggerUnit> &gold_triggers,
                  const std::vector<ArgumentUnit> &pred_args,
                  const std::vector<ArgumentUnit> &gold_args);

std::vector<TriggerUnit> TriggerUnits(const Corpus &corpus);
std::vector<ArgumentUnit> ArgumentUnits(const Corpus &corpus);

// Prediction JSONL: {"id","event_type","role","start","end","surface"}.
nlohmann::ordered_json ArgumentUnitToJson(const ArgumentUnit &unit);
ArgumentUnit ArgumentUnitFromJson(const nlohmann::json &j);

// ROUGE-1 F-measure over lowercased whitespace tokens with clipped counts.
// Two empty strings score 1; one empty side scores 0.
double Rouge1(std::string_view candidate, std::string_view reference);

nlohmann::ordered_json PrfToJson(const Prf &prf);

}  // namespace qga

#endif  // QGA_SCORING_H_
