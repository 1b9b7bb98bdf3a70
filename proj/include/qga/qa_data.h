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

#ifndef QGA_QA_DATA_H_
#define QGA_QA_DATA_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qga/corpus.h"
#include "qga/ontology.h"
#include "qga/seq2seq.h"

namespace qga {

inline constexpr std::string_view kAnswerSeparator = "; ";

// Replaces the terminal '?' with " in * <trigger> * event?". Throws
// std::invalid_argument when the question does not end with '?' or already
// carries a trigger clause.
std::string AttachTriggerClause(std::string_view question,
                                std::string_view trigger_surface);

// True when the question already ends with an "in * ... * event?" clause.
bool HasTriggerClause(std::string_view question);

// Surfaces joined by "; " in the given order; empty for no arguments.
std::string SerializeAnswer(const std::vector<ArgumentSpan> &arguments);

// "question: <question + trigger clause> context: <raw sentence>".
std::string FormatQaInput(std::string_view question,
                          std::string_view trigger_surface,
                          std::string_view text);

// One example per applicable candidate question, all sharing the serialized
// gold answer as output.
std::vector<Seq2SeqExample> EmitQaTraining(const TemplateRegistry &registry,
                                           const SentenceRecord &record,
                                           std::size_t mention_index,
                                           std::string_view role);

// Single inference example for a generated question; output unset. Throws
// std::invalid_argument for an empty question.
Seq2SeqExample EmitQaInference(std::string_view question,
                               const SentenceRecord &record,
                               std::size_t mention_index,
                               std::string_view role);

}  // namespace qga

#endif  // QGA_QA_DATA_H_
