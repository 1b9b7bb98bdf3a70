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

#ifndef QGA_QUESTION_GEN_H_
#define QGA_QUESTION_GEN_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qga/corpus.h"
#include "qga/ontology.h"
#include "qga/seq2seq.h"

namespace qga {

// A template with its position in the registry entry.
struct IndexedTemplate {
  std::size_t index = 0;
  const DynamicTemplate *tmpl = nullptr;
};

struct CandidateQuestion {
  std::size_t template_index = 0;
  std::size_t slot_count = 0;
  std::string text;

  bool operator==(const CandidateQuestion &) const = default;
};

// Templates of (mention.event_type, role) whose every slot role has at least
// one argument in the mention, in registry order. The base template is
// always included. Throws LookupError for unknown entries.
std::vector<IndexedTemplate> ApplicableTemplates(const TemplateRegistry &registry,
                                                 const EventMention &mention,
                                                 std::string_view role);

// Fills each slot with the earliest argument of that role. Throws
// std::invalid_argument if a slot role has no argument in the mention.
CandidateQuestion FillTemplate(const DynamicTemplate &tmpl, std::size_t index,
                               const EventMention &mention,
                               std::string_view text);

// All applicable templates, filled.
std::vector<CandidateQuestion> CandidateQuestions(const TemplateRegistry &registry,
                                                  const EventMention &mention,
                                                  std::string_view text,
                                                  std::string_view role);

// The gold QG target: the applicable candidate with the most slots, earliest
// in registry order on ties. Falls back to the base template when the
// mention has no argument for `role`.
CandidateQuestion SelectGoldQuestion(const TemplateRegistry &registry,
                                     const EventMention &mention,
                                     std::string_view text,
                                     std::string_view role);

// "role: <lowercased role> context: <trigger-marked sentence>".
std::string FormatQgInput(std::string_view role, std::string_view text,
                          Span trigger);

// QG example for one (mention, role); output is the gold question.
Seq2SeqExample EmitQgExample(const TemplateRegistry &registry,
                             const SentenceRecord &record,
                             std::size_t mention_index, std::string_view role);

// QG example without output, for inference.
Seq2SeqExample EmitQgInference(const SentenceRecord &record,
                               std::size_t mention_index,
                               std::string_view role);

}  // namespace qga

#endif  // QGA_QUESTION_GEN_H_
