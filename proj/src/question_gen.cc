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

#include "qga/question_gen.h"

#include <algorithm>
#include <stdexcept>

#include "qga/utf8.h"

namespace qga {
namespace {

const ArgumentSpan *EarliestArgument(const EventMention &mention,
                                     std::string_view role) {
  const ArgumentSpan *best = nullptr;
  for (const ArgumentSpan &a : mention.arguments) {
    if (a.role == role && (best == nullptr || a.start < best->start)) best = &a;
  }
  return best;
}

}  // namespace

std::vector<IndexedTemplate> ApplicableTemplates(const TemplateRegistry &registry,
                                                 const EventMention &mention,
                                                 std::string_view role) {
  const auto &templates = registry.Templates(mention.event_type, role);
  std::vector<IndexedTemplate> out;
  for (std::size_t i = 0; i < templates.size(); ++i) {
    const DynamicTemplate &t = templates[i];
    bool ok = std::all_of(t.slot_roles.begin(), t.slot_roles.end(),
                          [&](const std::string &slot) {
                            return HasRole(mention, slot);
                          });
    if (ok) out.push_back({i, &t});
  }
  return out;
}

CandidateQuestion FillTemplate(const DynamicTemplate &tmpl, std::size_t index,
                               const EventMention &mention,
                               std::string_view text) {
  CandidateQuestion q;
  q.template_index = index;
  q.slot_count = tmpl.slot_roles.size();
  for (const TemplatePiece &piece : SplitPlaceholders(tmpl.text)) {
    if (!piece.is_slot) {
      q.text += piece.text;
      continue;
    }
    const ArgumentSpan *arg = EarliestArgument(mention, piece.text);
    if (arg == nullptr) {
      throw std::invalid_argument("no argument for slot [" + piece.text +
                                  "] in \"" + tmpl.text + "\"");
    }
    q.text += SliceText(text, {arg->start, arg->end});
  }
  return q;
}

std::vector<CandidateQuestion> CandidateQuestions(const TemplateRegistry &registry,
                                                  const EventMention &mention,
                                                  std::string_view text,
                                                  std::string_view role) {
  std::vector<CandidateQuestion> out;
  for (const IndexedTemplate &it : ApplicableTemplates(registry, mention, role)) {
    out.push_back(FillTemplate(*it.tmpl, it.index, mention, text));
  }
  return out;
}

CandidateQuestion SelectGoldQuestion(const TemplateRegistry &registry,
                                     const EventMention &mention,
                                     std::string_view text,
                                     std::string_view role) {
  const auto &templates = registry.Templates(mention.event_type, role);
  if (!HasRole(mention, role)) {
    return FillTemplate(templates.front(), 0, mention, text);
  }
  std::vector<IndexedTemplate> applicable =
      ApplicableTemplates(registry, mention, role);
  // Strict '>' keeps the earliest template among equal slot counts.
  const IndexedTemplate *best = &applicable.front();
  for (const IndexedTemplate &it : applicable) {
    if (it.tmpl->slot_roles.size() > best->tmpl->slot_roles.size()) best = &it;
  }
  return FillTemplate(*best->tmpl, best->index, mention, text);
}

std::string FormatQgInput(std::string_view role, std::string_view text,
                          Span trigger) {
  return "role: " + AsciiLower(role) + " context: " + MarkTrigger(text, trigger);
}

Seq2SeqExample EmitQgInference(const SentenceRecord &record,
                               std::size_t mention_index,
                               std::string_view role) {
  const EventMention &mention = record.mentions.at(mention_index);
  Seq2SeqExample ex;
  ex.input = FormatQgInput(role, record.text, mention.trigger);
  ex.id = record.id;
  ex.role = std::string(role);
  ex.mention = mention_index;
  ex.event_type = mention.event_type;
  ex.trigger = mention.trigger;
  return ex;
}

Seq2SeqExample EmitQgExample(const TemplateRegistry &registry,
                             const SentenceRecord &record,
                             std::size_t mention_index, std::string_view role) {
  Seq2SeqExample ex = EmitQgInference(record, mention_index, role);
  ex.output = SelectGoldQuestion(registry, record.mentions.at(mention_index),
                                 record.text, role)
                  .text;
  return ex;
}

}  // namespace qga
