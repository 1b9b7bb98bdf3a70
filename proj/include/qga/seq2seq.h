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

#ifndef QGA_SEQ2SEQ_H_
#define QGA_SEQ2SEQ_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qga/corpus.h"

namespace qga {

// One text-to-text pair for QG or QA. `output` is unset for inference
// inputs and may be empty for QA targets without arguments.
struct Seq2SeqExample {
  std::string input;
  std::optional<std::string> output;
  std::string id;
  std::string role;
  std::size_t mention = 0;  // index into the record's mentions
  std::string event_type;
  Span trigger;

  bool operator==(const Seq2SeqExample &) const = default;
};

// JSONL line layout:
//   {"input","output","id","role","mention","event_type","trigger":{...}}
// "output" is omitted when unset.
nlohmann::ordered_json ExampleToJson(const Seq2SeqExample &example);
Seq2SeqExample ExampleFromJson(const nlohmann::json &j);

void WriteExamples(std::ostream &out, const std::vector<Seq2SeqExample> &examples);
std::vector<Seq2SeqExample> ReadExamples(std::istream &in,
                                         std::string_view source = "<stream>");
std::vector<Seq2SeqExample> LoadExamples(const std::filesystem::path &path);
void SaveExamples(const std::filesystem::path &path,
                  const std::vector<Seq2SeqExample> &examples);

// Reads any JSONL file into JSON values, one per non-blank line.
std::vector<nlohmann::json> ReadJsonLines(std::istream &in,
                                          std::string_view source);
std::vector<nlohmann::json> LoadJsonLines(const std::filesystem::path &path);

}  // namespace qga

#endif  // QGA_SEQ2SEQ_H_
