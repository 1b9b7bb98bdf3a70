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

#include "qga/pipeline.h"

#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "qga/error.h"
#include "qga/qa_data.h"
#include "qga/question_gen.h"
#include "qga/seq2seq.h"
#include "qga/utf8.h"

namespace qga {
namespace {

namespace fs = std::filesystem;

std::map<std::string, std::size_t> IndexById(const Corpus &corpus) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!index.emplace(corpus[i].id, i).second) {
      throw ValidationError("duplicate record id " + corpus[i].id);
    }
  }
  return index;
}

// Runs `inputs` through the backend in batches of `batch_size`.
std::vector<std::string> GenerateAll(Backend &backend, ModelKind model,
                                     const std::vector<std::string> &inputs,
                                     const GenerationParams &params,
                                     std::size_t batch_size) {
  std::vector<std::string> outputs;
  outputs.reserve(inputs.size());
  if (batch_size == 0) batch_size = 1;
  for (std::size_t begin = 0; begin < inputs.size(); begin += batch_size) {
    std::size_t end = std::min(inputs.size(), begin + batch_size);
    GenerationRequest request;
    request.model = model;
    request.inputs.assign(inputs.begin() + begin, inputs.begin() + end);
    request.params = params;
    for (std::string &out : backend.Generate(request)) {
      outputs.push_back(std::move(out));
    }
  }
  return outputs;
}

class ArtifactWriter {
 public:
  explicit ArtifactWriter(fs::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  void Examples(const char *name, const std::vector<Seq2SeqExample> &examples) {
    if (dir_.empty()) return;
    SaveExamples(dir_ / name, examples);
  }

  template <typename T, typename F>
  void Lines(const char *name, const std::vector<T> &items, F to_json) {
    if (dir_.empty()) return;
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw Error("cannot write " + (dir_ / name).string());
    for (const T &item : items) out << to_json(item).dump() << '\n';
  }

  void Json(const char *name, const nlohmann::ordered_json &j) {
    if (dir_.empty()) return;
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw Error("cannot write " + (dir_ / name).string());
    out << j.dump(2) << '\n';
  }

 private:
  fs::path dir_;
};

GenerationParams ParamsFromJson(const nlohmann::json &j, GenerationParams p) {
  p.max_length = j.value("max_length", p.max_length);
  p.num_beams = j.value("num_beams", p.num_beams);
  p.length_penalty = j.value("length_penalty", p.length_penalty);
  return p;
}

fs::path Resolve(const fs::path &base, const std::string &p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

TaskPlan EnumerateTasks(const TemplateRegistry &registry, const Corpus &corpus) {
  TaskPlan plan;
  for (std::size_t r = 0; r < corpus.size(); ++r) {
    const SentenceRecord &record = corpus[r];
    for (std::size_t m = 0; m < record.mentions.size(); ++m) {
      const EventMention &mention = record.mentions[m];
      const EventTypeDef *def = registry.FindEventType(mention.event_type);
      if (def == nullptr) {
        ++plan.skipped_mentions;
        plan.warnings.push_back("record " + record.id + " mention " +
                                std::to_string(m) + ": event type " +
                                mention.event_type +
                                " is not in the registry, skipped");
        continue;
      }
      for (const std::string &role : def->roles) {
        plan.tasks.push_back({r, m, role});
      }
    }
  }
  return plan;
}

std::string NormalizeQuestion(std::string_view generated,
                              std::string_view eos_token) {
  std::string_view q = Trim(generated);
  if (!eos_token.empty() && q.ends_with(eos_token)) {
    q.remove_suffix(eos_token.size());
    q = Trim(q);
  }
  if (q.empty()) return {};
  std::string out(q);
  if (out.back() != '?') out += '?';
  return out;
}

nlohmann::ordered_json RawAnswerToJson(const RawAnswer &answer) {
  nlohmann::ordered_json j;
  j["id"] = answer.id;
  j["mention"] = answer.mention;
  j["role"] = answer.role;
  j["raw"] = answer.raw;
  return j;
}

RawAnswer RawAnswerFromJson(const nlohmann::json &j) {
  RawAnswer a;
  a.id = j.at("id").get<std::string>();
  a.mention = j.value("mention", std::size_t{0});
  a.role = j.at("role").get<std::string>();
  a.raw = j.contains("raw") ? j.at("raw").get<std::string>()
                            : j.at("output").get<std::string>();
  return a;
}

std::vector<ArgumentUnit> DecodeRawAnswers(const Corpus &corpus,
                                           const std::vector<RawAnswer> &answers,
                                           std::string_view eos_token,
                                           std::size_t *discarded) {
  std::map<std::string, std::size_t> index = IndexById(corpus);
  std::vector<ArgumentUnit> out;
  std::size_t dropped = 0;
  for (const RawAnswer &a : answers) {
    auto it = index.find(a.id);
    if (it == index.end()) throw LookupError("unknown record id " + a.id);
    const SentenceRecord &record = corpus[it->second];
    if (a.mention >= record.mentions.size()) {
      throw LookupError("record " + a.id + " has no mention " +
                        std::to_string(a.mention));
    }
    const EventMention &mention = record.mentions[a.mention];
    DecodedArguments decoded = DecodeAnswer(a.raw, record.text, a.role, eos_token);
    dropped += decoded.discarded.size();
    for (ArgumentSpan &span : decoded.spans) {
      out.push_back({record.id, span.start, span.end, mention.event_type,
                     span.role, std::move(span.surface)});
    }
  }
  if (discarded != nullptr) *discarded = dropped;
  return out;
}

nlohmann::ordered_json PipelineResult::ToJson() const {
  nlohmann::ordered_json j = report.ToJson();
  j["tasks"] = task_count;
  j["skipped_mentions"] = skipped_mentions;
  j["discarded_candidates"] = discarded_candidates;
  j["warnings"] = warnings;
  return j;
}

PipelineResult RunPipeline(const TemplateRegistry &registry, const Corpus &corpus,
                           const Corpus &gold, Backend &backend,
                           const PipelineOptions &options) {
  IndexById(corpus);
  IndexById(gold);
  ArtifactWriter artifacts(options.output_dir);
  TaskPlan plan = EnumerateTasks(registry, corpus);

  PipelineResult result;
  result.task_count = plan.tasks.size();
  result.skipped_mentions = plan.skipped_mentions;
  result.warnings = plan.warnings;

  // Question generation.
  std::vector<Seq2SeqExample> qg;
  std::vector<std::string> qg_inputs;
  for (const Task &t : plan.tasks) {
    qg.push_back(EmitQgInference(corpus[t.record], t.mention, t.role));
    qg_inputs.push_back(qg.back().input);
  }
  artifacts.Examples("qg_inputs.jsonl", qg);
  std::vector<std::string> questions =
      GenerateAll(backend, ModelKind::kQg, qg_inputs, options.qg, options.batch_size);
  for (std::size_t i = 0; i < qg.size(); ++i) qg[i].output = questions[i];
  artifacts.Examples("qg_outputs.jsonl", qg);

  // Question answering.
  std::vector<Seq2SeqExample> qa;
  std::vector<std::string> qa_inputs;
  for (std::size_t i = 0; i < plan.tasks.size(); ++i) {
    const Task &t = plan.tasks[i];
    std::string question = NormalizeQuestion(questions[i], options.eos_token);
    if (question.empty()) {
      throw BackendError("QG backend returned an empty question for " +
                         corpus[t.record].id + " mention " +
                         std::to_string(t.mention) + " role " + t.role);
    }
    qa.push_back(EmitQaInference(question, corpus[t.record], t.mention, t.role));
    qa_inputs.push_back(qa.back().input);
  }
  artifacts.Examples("qa_inputs.jsonl", qa);
  std::vector<std::string> answers =
      GenerateAll(backend, ModelKind::kQa, qa_inputs, options.qa, options.batch_size);
  for (std::size_t i = 0; i < qa.size(); ++i) qa[i].output = answers[i];
  artifacts.Examples("qa_outputs.jsonl", qa);

  std::vector<RawAnswer> raw;
  for (std::size_t i = 0; i < plan.tasks.size(); ++i) {
    const Task &t = plan.tasks[i];
    raw.push_back({corpus[t.record].id, t.mention, t.role, answers[i]});
  }
  artifacts.Lines("raw_answers.jsonl", raw, RawAnswerToJson);

  // Decoding and scoring.
  result.predictions = DecodeRawAnswers(corpus, raw, options.eos_token,
                                        &result.discarded_candidates);
  artifacts.Lines("predictions.jsonl", result.predictions, ArgumentUnitToJson);

  result.report = Score(TriggerUnits(corpus), TriggerUnits(gold),
                        result.predictions, ArgumentUnits(gold));
  artifacts.Json("report.json", result.ToJson());
  return result;
}

PipelineConfig PipelineConfig::FromJson(const nlohmann::json &j,
                                        const fs::path &base_dir) {
  PipelineConfig c;
  try {
    c.registry = Resolve(base_dir, j.at("registry").get<std::string>());
    c.corpus = Resolve(base_dir, j.at("corpus").get<std::string>());
    c.gold_corpus = j.contains("gold_corpus")
                        ? Resolve(base_dir, j.at("gold_corpus").get<std::string>())
                        : c.corpus;
    c.backend = j.at("backend").get<std::string>();
    constexpr std::string_view kOracle = "oracle:";
    if (std::string_view(c.backend).starts_with(kOracle)) {
      c.backend = std::string(kOracle) +
                  Resolve(base_dir, c.backend.substr(kOracle.size())).string();
    }
    c.output_dir = Resolve(base_dir, j.at("output_dir").get<std::string>());
    c.options.output_dir = c.output_dir;
    c.options.eos_token = j.value("eos_token", std::string(kDefaultEosToken));
    c.options.batch_size = j.value("batch_size", std::size_t{32});
    if (j.contains("qg")) c.options.qg = ParamsFromJson(j.at("qg"), c.options.qg);
    if (j.contains("qa")) c.options.qa = ParamsFromJson(j.at("qa"), c.options.qa);
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("pipeline config: ") + e.what());
  }
  return c;
}

PipelineConfig PipelineConfig::Load(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return FromJson(j, path.parent_path());
}

void PipelineConfig::Validate() const {
  auto require = [](const fs::path &p, const char *what) {
    if (!fs::exists(p)) {
      throw ValidationError(std::string(what) + " not found: " + p.string());
    }
  };
  require(registry, "registry");
  require(corpus, "corpus");
  require(gold_corpus, "gold corpus");
  constexpr std::string_view kOracle = "oracle:";
  if (std::string_view(backend).starts_with(kOracle)) {
    require(backend.substr(kOracle.size()), "oracle book");
  }
  if (options.batch_size == 0) throw ValidationError("batch_size must be >= 1");
  for (const GenerationParams *p : {&options.qg, &options.qa}) {
    if (p->num_beams < 1 || p->max_length < 1) {
      throw ValidationError("num_beams and max_length must be >= 1");
    }
  }
}

PipelineResult RunPipeline(const PipelineConfig &config) {
  config.Validate();
  TemplateRegistry registry = LoadRegistry(config.registry);
  Corpus corpus = LoadCorpus(config.corpus);
  Corpus gold = config.gold_corpus == config.corpus ? corpus
                                                    : LoadCorpus(config.gold_corpus);
  std::unique_ptr<Backend> backend = MakeBackend(config.backend);
  return RunPipeline(registry, corpus, gold, *backend, config.options);
}

OracleBook BuildOracleBook(const TemplateRegistry &registry, const Corpus &corpus,
                           std::string_view eos_token) {
  OracleBook book;
  for (const Task &t : EnumerateTasks(registry, corpus).tasks) {
    const SentenceRecord &record = corpus[t.record];
    const EventMention &mention = record.mentions[t.mention];
    Seq2SeqExample qg = EmitQgExample(registry, record, t.mention, t.role);
    Seq2SeqExample qa = EmitQaInference(*qg.output, record, t.mention, t.role);
    std::string answer = SerializeAnswer(ArgumentsForRole(mention, t.role));
    if (!eos_token.empty()) {
      if (!answer.empty()) answer += ' ';
      answer += eos_token;
    }
    book.Add(qg.input, *qg.output);
    book.Add(qa.input, answer);
  }
  return book;
}

}  // namespace qga
