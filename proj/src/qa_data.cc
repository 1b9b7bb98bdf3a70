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

#include "qga/qa_data.h"

#include <stdexcept>

#include "qga/question_gen.h"
#include "qga/utf8.h"

namespace qga {
namespace {

constexpr std::string_view kClauseOpen = " in * ";
constexpr std::string_view kClauseClose = " * event?";

}  // namespace

bool HasTriggerClause(std::string_view question) {
  if (!question.ends_with(kClauseClose)) return false;
  std::string_view head = question.substr(0, question.size() - kClauseClose.size());
  return head.find(kClauseOpen) != std::string_view::npos;
}

std::string AttachTriggerClause(std::string_view question,
                                std::string_view trigger_surface) {
  if (question.empty() || question.back() != '?') {
    throw std::invalid_argument("question does not end with '?': \"" +
                                std::string(question) + "\"");
  }
  if (HasTriggerClause(question)) {
    throw std::invalid_argument("question already has a trigger clause: \"" +
                                std::string(question) + "\"");
  }
  std::string out(question.substr(0, question.size() - 1));
  out += kClauseOpen;
  out += trigger_surface;
  out += kClauseClose;
  return out;
}

std::string SerializeAnswer(const std::vector<ArgumentSpan> &arguments) {
  std::string out;
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    if (i > 0) out += kAnswerSeparator;
    out += arguments[i].surface;
  }
  return out;
}

std::string FormatQaInput(std::string_view question,
                          std::string_view trigger_surface,
                          std::string_view text) {
  std::string out = "question: ";
  out += AttachTriggerClause(question, trigger_surface);
  out += " context: ";
  out += text;
  return out;
}

std::vector<Seq2SeqExample> EmitQaTraining(const TemplateRegistry &registry,
                                           const SentenceRecord &record,
                                           std::size_t mention_index,
                                           std::string_view role) {
  const EventMention &mention = record.mentions.at(mention_index);
  const std::string trigger = SliceText(record.text, mention.trigger);
  const std::string answer = SerializeAnswer(ArgumentsForRole(mention, role));
  std::vector<Seq2SeqExample> out;
  for (const CandidateQuestion &q :
       CandidateQuestions(registry, mention, record.text, role)) {
    Seq2SeqExample ex;
    ex.input = FormatQaInput(q.text, trigger, record.text);
    ex.output = answer;
    ex.id = record.id;
    ex.role = std::string(role);
    ex.mention = mention_index;
    ex.event_type = mention.event_type;
    ex.trigger = mention.trigger;
    out.push_back(std::move(ex));
  }
  return out;
}

Seq2SeqExample EmitQaInference(std::string_view question,
                               const SentenceRecord &record,
                               std::size_t mention_index,
                               std::string_view role) {
  if (Trim(question).empty()) {
    throw std::invalid_argument("empty question for " + record.id + "/" +
                                std::string(role));
  }
  const EventMention &mention = record.mentions.at(mention_index);
  Seq2SeqExample ex;
  ex.input = FormatQaInput(question, SliceText(record.text, mention.trigger),
                           record.text);
  ex.id = record.id;
  ex.role = std::string(role);
  ex.mention = mention_index;
  ex.event_type = mention.event_type;
  ex.trigger = mention.trigger;
  return ex;
}

}  // namespace qga
