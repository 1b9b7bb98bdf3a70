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

// qga: command-line front end for question-generation / question-answering
// event argument extraction.
//
// Exit codes: 0 success, 1 validation or input error, 2 backend failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "qga/backend.h"
#include "qga/corpus.h"
#include "qga/decode.h"
#include "qga/error.h"
#include "qga/ontology.h"
#include "qga/pipeline.h"
#include "qga/qa_data.h"
#include "qga/question_gen.h"
#include "qga/scoring.h"
#include "qga/seq2seq.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBackend = 2;

std::ofstream OpenOutput(const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qga::Error("cannot write " + path);
  return out;
}

struct ParamOverrides {
  std::optional<int> max_length;
  std::optional<int> num_beams;
  std::optional<double> length_penalty;

  void Register(CLI::App *cmd) {
    cmd->add_option("--max-length", max_length, "Generation token budget");
    cmd->add_option("--num-beams", num_beams, "Beam count (1 = greedy)");
    cmd->add_option("--length-penalty", length_penalty, "Beam length penalty");
  }

  qga::GenerationParams Apply(qga::GenerationParams p) const {
    if (max_length) p.max_length = *max_length;
    if (num_beams) p.num_beams = *num_beams;
    if (length_penalty) p.length_penalty = *length_penalty;
    return p;
  }
};

int PrepareQg(const std::string &registry_path, const std::string &corpus_path,
              const std::string &output_path) {
  qga::TemplateRegistry registry = qga::LoadRegistry(registry_path);
  qga::Corpus corpus = qga::LoadCorpus(corpus_path);
  qga::TaskPlan plan = qga::EnumerateTasks(registry, corpus);
  for (const std::string &w : plan.warnings) std::cerr << "warning: " << w << "\n";
  std::vector<qga::Seq2SeqExample> examples;
  for (const qga::Task &t : plan.tasks) {
    examples.push_back(qga::EmitQgExample(registry, corpus[t.record], t.mention, t.role));
  }
  std::ofstream out = OpenOutput(output_path);
  qga::WriteExamples(out, examples);
  std::cerr << "wrote " << examples.size() << " QG examples to " << output_path << "\n";
  return kExitOk;
}

int PrepareQa(const std::string &registry_path, const std::string &corpus_path,
              const std::string &output_path, const std::string &mode,
              const std::string &questions_path) {
  qga::TemplateRegistry registry = qga::LoadRegistry(registry_path);
  qga::Corpus corpus = qga::LoadCorpus(corpus_path);
  qga::TaskPlan plan = qga::EnumerateTasks(registry, corpus);
  for (const std::string &w : plan.warnings) std::cerr << "warning: " << w << "\n";

  std::vector<qga::Seq2SeqExample> examples;
  if (mode == "train") {
    std::size_t base_count = 0;
    for (const qga::Task &t : plan.tasks) {
      for (auto &ex : qga::EmitQaTraining(registry, corpus[t.record], t.mention, t.role)) {
        examples.push_back(std::move(ex));
      }
      ++base_count;
    }
    std::cerr << "augmented " << base_count << " (mention, role) pairs into "
              << examples.size() << " QA examples\n";
  } else {
    if (questions_path.empty()) {
      throw qga::ValidationError("--mode infer requires --questions");
    }
    // (id, mention, role) -> generated question.
    std::map<std::tuple<std::string, std::size_t, std::string>, std::string> questions;
    for (const nlohmann::json &j : qga::LoadJsonLines(questions_path)) {
      std::string q = j.contains("question") ? j.at("question").get<std::string>()
                                             : j.at("output").get<std::string>();
      questions[{j.at("id").get<std::string>(), j.value("mention", std::size_t{0}),
                 j.at("role").get<std::string>()}] = q;
    }
    for (const qga::Task &t : plan.tasks) {
      const qga::SentenceRecord &record = corpus[t.record];
      auto it = questions.find({record.id, t.mention, t.role});
      if (it == questions.end()) {
        throw qga::ValidationError("no question for " + record.id + " mention " +
                                   std::to_string(t.mention) + " role " + t.role);
      }
      std::string q = qga::NormalizeQuestion(it->second, qga::kDefaultEosToken);
      if (q.empty()) {
        throw qga::ValidationError("empty question for " + record.id + " role " + t.role);
      }
      examples.push_back(qga::EmitQaInference(q, record, t.mention, t.role));
    }
  }
  std::ofstream out = OpenOutput(output_path);
  qga::WriteExamples(out, examples);
  std::cerr << "wrote " << examples.size() << " QA examples to " << output_path << "\n";
  return kExitOk;
}

int Infer(const std::string &stage, const std::string &input_path,
          const std::string &output_path, const std::string &backend_spec,
          const ParamOverrides &overrides, std::size_t batch_size) {
  qga::ModelKind model = qga::ParseModelName(stage);
  qga::GenerationParams params = overrides.Apply(
      model == qga::ModelKind::kQg ? qga::DefaultQgParams() : qga::DefaultQaParams());
  std::vector<qga::Seq2SeqExample> examples = qga::LoadExamples(input_path);
  std::unique_ptr<qga::Backend> backend = qga::MakeBackend(backend_spec);
  if (batch_size == 0) batch_size = 1;
  for (std::size_t begin = 0; begin < examples.size(); begin += batch_size) {
    std::size_t end = std::min(examples.size(), begin + batch_size);
    qga::GenerationRequest request;
    request.model = model;
    request.params = params;
    for (std::size_t i = begin; i < end; ++i) request.inputs.push_back(examples[i].input);
    std::vector<std::string> outputs = backend->Generate(request);
    for (std::size_t i = begin; i < end; ++i) examples[i].output = outputs[i - begin];
  }
  std::ofstream out = OpenOutput(output_path);
  qga::WriteExamples(out, examples);
  std::cerr << "generated " << examples.size() << " " << stage << " outputs\n";
  return kExitOk;
}

int Decode(const std::string &answers_path, const std::string &corpus_path,
           const std::string &output_path, const std::string &eos) {
  qga::Corpus corpus = qga::LoadCorpus(corpus_path);
  std::vector<qga::RawAnswer> answers;
  for (const nlohmann::json &j : qga::LoadJsonLines(answers_path)) {
    answers.push_back(qga::RawAnswerFromJson(j));
  }
  std::size_t discarded = 0;
  std::vector<qga::ArgumentUnit> predictions =
      qga::DecodeRawAnswers(corpus, answers, eos, &discarded);
  std::ofstream out = OpenOutput(output_path);
  for (const qga::ArgumentUnit &u : predictions) {
    out << qga::ArgumentUnitToJson(u).dump() << '\n';
  }
  std::cerr << "decoded " << predictions.size() << " arguments, discarded "
            << discarded << " unmatched candidates\n";
  return kExitOk;
}

int Score(const std::string &predictions_path, const std::string &gold_path,
          const std::string &triggers_path, const std::string &report_path) {
  qga::Corpus gold = qga::LoadCorpus(gold_path);
  qga::Corpus triggers = triggers_path.empty() ? gold : qga::LoadCorpus(triggers_path);
  std::vector<qga::ArgumentUnit> predictions;
  for (const nlohmann::json &j : qga::LoadJsonLines(predictions_path)) {
    predictions.push_back(qga::ArgumentUnitFromJson(j));
  }
  qga::ScoreReport report =
      qga::Score(qga::TriggerUnits(triggers), qga::TriggerUnits(gold), predictions,
                 qga::ArgumentUnits(gold));
  std::cout << report.ToTable();
  if (!report_path.empty()) {
    std::ofstream out = OpenOutput(report_path);
    out << report.ToJson().dump(2) << '\n';
  }
  return kExitOk;
}

int ScoreQuestions(const std::string &questions_path, const std::string &references_path,
                   const std::string &report_path) {
  using Key = std::tuple<std::string, std::size_t, std::string>;
  auto load = [](const std::string &path) {
    std::map<Key, std::string> out;
    for (const nlohmann::json &j : qga::LoadJsonLines(path)) {
      std::string q = j.contains("question") ? j.at("question").get<std::string>()
                                             : j.at("output").get<std::string>();
      out[{j.at("id").get<std::string>(), j.value("mention", std::size_t{0}),
           j.at("role").get<std::string>()}] = q;
    }
    return out;
  };
  std::map<Key, std::string> candidates = load(questions_path);
  std::map<Key, std::string> references = load(references_path);
  double total = 0.0;
  std::size_t missing = 0;
  for (const auto &[key, ref] : references) {
    auto it = candidates.find(key);
    if (it == candidates.end()) {
      ++missing;
      continue;
    }
    total += qga::Rouge1(qga::NormalizeQuestion(it->second, qga::kDefaultEosToken), ref);
  }
  // Missing questions count as 0.
  double mean = references.empty() ? 0.0 : total / references.size();
  std::printf("ROUGE-1 %.4f over %zu questions (%zu missing)\n", mean,
              references.size(), missing);
  if (!report_path.empty()) {
    nlohmann::ordered_json j;
    j["rouge1"] = mean;
    j["references"] = references.size();
    j["missing"] = missing;
    std::ofstream out = OpenOutput(report_path);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int Pipeline(const std::string &config_path) {
  qga::PipelineConfig config = qga::PipelineConfig::Load(config_path);
  qga::PipelineResult result = qga::RunPipeline(config);
  for (const std::string &w : result.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << result.report.ToTable();
  std::cout << "tasks " << result.task_count << ", skipped mentions "
            << result.skipped_mentions << ", discarded candidates "
            << result.discarded_candidates << "\n";
  std::cerr << "artifacts in " << config.output_dir.string() << "\n";
  return kExitOk;
}

int OracleBookCmd(const std::string &registry_path, const std::string &corpus_path,
                  const std::string &output_path, const std::string &eos) {
  qga::TemplateRegistry registry = qga::LoadRegistry(registry_path);
  qga::Corpus corpus = qga::LoadCorpus(corpus_path);
  qga::OracleBook book = qga::BuildOracleBook(registry, corpus, eos);
  book.Save(output_path);
  std::cerr << "wrote " << book.size() << " oracle entries to " << output_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Event argument extraction as question generation and answering"};
  app.require_subcommand(1);

  std::string registry, corpus, output, mode = "train", questions, stage, input,
                                        backend, answers, eos{qga::kDefaultEosToken},
                                        predictions, gold, triggers, report, config,
                                        references;
  std::size_t batch_size = 32;
  bool qg_eval = false;
  ParamOverrides overrides;

  CLI::App *prep_qg = app.add_subcommand("prepare-qg", "Build QG examples from a corpus");
  prep_qg->add_option("--registry", registry, "Template registry JSON")->required();
  prep_qg->add_option("--corpus", corpus, "Corpus JSONL")->required();
  prep_qg->add_option("-o,--output", output, "Output JSONL")->required();

  CLI::App *prep_qa = app.add_subcommand("prepare-qa", "Build QA examples from a corpus");
  prep_qa->add_option("--registry", registry, "Template registry JSON")->required();
  prep_qa->add_option("--corpus", corpus, "Corpus JSONL")->required();
  prep_qa->add_option("-o,--output", output, "Output JSONL")->required();
  prep_qa->add_option("--mode", mode, "train (augmented, with answers) or infer")
      ->check(CLI::IsMember({"train", "infer"}));
  prep_qa->add_option("--questions", questions,
                      "Generated questions JSONL keyed by id/mention/role (infer mode)");

  CLI::App *infer = app.add_subcommand("infer", "Run examples through a backend");
  infer->add_option("--stage", stage, "qg or qa")
      ->required()
      ->check(CLI::IsMember({"qg", "qa"}));
  infer->add_option("-i,--input", input, "Seq2Seq example JSONL")->required();
  infer->add_option("-o,--output", output, "Output JSONL")->required();
  infer->add_option("--backend", backend, "oracle:<book.jsonl> or http://host:port")
      ->required();
  infer->add_option("--batch-size", batch_size, "Inputs per request");
  overrides.Register(infer);

  CLI::App *decode = app.add_subcommand("decode", "Align raw answers to argument spans");
  decode->add_option("--answers", answers, "Raw answers JSONL {id,mention,role,raw}")
      ->required();
  decode->add_option("--corpus", corpus, "Corpus JSONL")->required();
  decode->add_option("-o,--output", output, "Predictions JSONL")->required();
  decode->add_option("--eos", eos, "End-of-sequence token to strip");

  CLI::App *score = app.add_subcommand("score", "Score predictions against gold");
  score->add_option("--predictions", predictions, "Predictions JSONL, or questions with --qg-eval");
  score->add_option("--gold", gold, "Gold corpus JSONL");
  score->add_option("--triggers", triggers, "Corpus holding predicted triggers (default: gold)");
  score->add_option("--report-json", report, "Write a JSON report here");
  score->add_flag("--qg-eval", qg_eval, "Score generated questions with ROUGE-1");
  score->add_option("--references", references, "Gold QG examples JSONL (--qg-eval)");

  CLI::App *pipeline = app.add_subcommand("pipeline", "QG -> QA -> decode -> score");
  pipeline->add_option("--config", config, "Pipeline config JSON")->required();

  CLI::App *oracle = app.add_subcommand("oracle-book", "Build an oracle book from gold annotations");
  oracle->add_option("--registry", registry, "Template registry JSON")->required();
  oracle->add_option("--corpus", corpus, "Corpus JSONL")->required();
  oracle->add_option("-o,--output", output, "Oracle book JSONL")->required();
  oracle->add_option("--eos", eos, "End-of-sequence token appended to answers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*prep_qg) return PrepareQg(registry, corpus, output);
    if (*prep_qa) return PrepareQa(registry, corpus, output, mode, questions);
    if (*infer) return Infer(stage, input, output, backend, overrides, batch_size);
    if (*decode) return Decode(answers, corpus, output, eos);
    if (*score) {
      if (qg_eval) {
        if (predictions.empty() || references.empty()) {
          throw qga::ValidationError("--qg-eval needs --predictions and --references");
        }
        return ScoreQuestions(predictions, references, report);
      }
      if (predictions.empty() || gold.empty()) {
        throw qga::ValidationError("score needs --predictions and --gold");
      }
      return Score(predictions, gold, triggers, report);
    }
    if (*pipeline) return Pipeline(config);
    if (*oracle) return OracleBookCmd(registry, corpus, output, eos);
  } catch (const qga::BackendError &e) {
    std::cerr << "backend error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
