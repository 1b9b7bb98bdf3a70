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

#ifndef QGA_CORPUS_H_
#define QGA_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qga {

// Half-open [start, end) range of Unicode scalar offsets into a sentence.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Span &) const = default;
};

struct ArgumentSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string role;
  std::string surface;

  bool operator==(const ArgumentSpan &) const = default;
};

struct EventMention {
  std::string event_type;
  Span trigger;
  std::vector<ArgumentSpan> arguments;  // ascending by start after load

  bool operator==(const EventMention &) const = default;
};

struct SentenceRecord {
  std::string id;
  std::string text;
  std::vector<EventMention> mentions;

  bool operator==(const SentenceRecord &) const = default;
};

using Corpus = std::vector<SentenceRecord>;

// Reads ACE05-E style JSONL (see docs/corpus_schema.md). Blank lines are
// skipped. Throws ParseError with the line number for malformed lines and
// ValidationError naming the record id for offset problems. Arguments are
// stable-sorted by start offset and get their surface filled in.
Corpus ReadCorpus(std::istream &in, std::string_view source = "<stream>");
Corpus LoadCorpus(const std::filesystem::path &path);

// Validates and canonicalizes one record.
SentenceRecord RecordFromJson(const nlohmann::json &j);

nlohmann::ordered_json RecordToJson(const SentenceRecord &record);
void WriteCorpus(std::ostream &out, const Corpus &corpus);

// Text between scalar offsets. Throws std::out_of_range past the end.
std::string SliceText(std::string_view text, Span span);

// Surrounds the trigger with "* " and " *".
std::string MarkTrigger(std::string_view text, Span trigger);

// Arguments of `role` in ascending start order.
std::vector<ArgumentSpan> ArgumentsForRole(const EventMention &mention,
                                           std::string_view role);

bool HasRole(const EventMention &mention, std::string_view role);

}  // namespace qga

#endif  // QGA_CORPUS_H_
