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

#ifndef QGA_PIPELINE_H_
#define QGA_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qga/backend.h"
#include "qga/corpus.h"
#include "qga/decode.h"
#include "qga/ontology.h"
#include "qga/scoring.h"

namespace qga {

// One question to ask: a role of one mention of one record.
struct Task {
  std::size_t record = 0;
  std::size_t mention = 0;
  std::string role;

  bool operator==(const Task &) const = default;
};

struct TaskPlan {
  std::vector<Task> tasks;
  std::size_t skipped_mentions = 0;   // event type not in the registry
  std::vector<std::string> warnings;
};

// Corpus order x mention order x role order of the event type.
TaskPlan EnumerateTasks(const TemplateRegistry &registry, const Corpus &corpus);

struct PipelineOptions {
  std::string eos_token{kDefaultEosToken};
  GenerationParams qg = DefaultQgParams();
  GenerationParams qa = DefaultQaParams();
  std::size_t batch_size = 32;
  // Where intermediate artifacts go; nothing is written when empty.
  std::filesystem::path output_dir;
};

struct PipelineResult {
  ScoreReport report;
  std::size_t task_count = 0;
  std::size_t skipped_mentions = 0;
  std::size_t discarded_candidates = 0;
  std::vector<std::string> warnings;
  std::vector<ArgumentUnit> predictions;

  nlohmann::ordered_json ToJson() const;
};

// QG -> QA -> decode -> score. `corpus` supplies the triggers to query
// (gold or predicted); `gold` supplies the reference annotations. Each
// stage's artifacts are written before the next stage starts, so a backend
// failure leaves everything produced so far on disk.
PipelineResult RunPipeline(const TemplateRegistry &registry, const Corpus &corpus,
                           const Corpus &gold, Backend &backend,
                           const PipelineOptions &options);

// Pipeline configuration file (docs/config_schema.md). Relative paths are
// resolved against the directory holding the config file.
struct PipelineConfig {
  std::filesystem::path registry;
  std::filesystem::path corpus;
  std::filesystem::path gold_corpus;  // defaults to `corpus`
  std::string backend;                // "oracle:<path>" or "http://host:port"
  std::filesystem::path output_dir;
  PipelineOptions options;

  static PipelineConfig FromJson(const nlohmann::json &j,
                                 const std::filesystem::path &base_dir);
  static PipelineConfig Load(const std::filesystem::path &path);

  // Throws ValidationError when a referenced input path does not exist.
  void Validate() const;
};

PipelineResult RunPipeline(const PipelineConfig &config);

// Canned gold outputs for every task in the corpus: QG input -> gold
// question, QA input (built from that question) -> serialized gold answer
// followed by the EOS token.
OracleBook BuildOracleBook(const TemplateRegistry &registry, const Corpus &corpus,
                           std::string_view eos_token = kDefaultEosToken);

// Strips a trailing EOS token and whitespace from a generated question and
// makes sure it ends with '?'. Returns an empty string for empty output.
std::string NormalizeQuestion(std::string_view generated, std::string_view eos_token);

// {"id","mention","role","raw"} line of a raw-answers file.
struct RawAnswer {
  std::string id;
  std::size_t mention = 0;
  std::string role;
  std::string raw;
};

nlohmann::ordered_json RawAnswerToJson(const RawAnswer &answer);
// Accepts "raw" or, failing that, "output" as the answer field.
RawAnswer RawAnswerFromJson(const nlohmann::json &j);

// Decodes raw answers against their sentences. Throws LookupError for ids or
// mention indices absent from the corpus.
std::vector<ArgumentUnit> DecodeRawAnswers(const Corpus &corpus,
                                           const std::vector<RawAnswer> &answers,
                                           std::string_view eos_token,
                                           std::size_t *discarded = nullptr);

}  // namespace qga

#endif  // QGA_PIPELINE_H_
