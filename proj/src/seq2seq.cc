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

#include "qga/seq2seq.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "qga/error.h"
#include "qga/utf8.h"

namespace qga {

nlohmann::ordered_json ExampleToJson(const Seq2SeqExample &example) {
  nlohmann::ordered_json j;
  j["input"] = example.input;
  if (example.output) j["output"] = *example.output;
  j["id"] = example.id;
  j["role"] = example.role;
  j["mention"] = example.mention;
  j["event_type"] = example.event_type;
  j["trigger"] = {{"start", example.trigger.start},
                  {"end", example.trigger.end}};
  return j;
}

Seq2SeqExample ExampleFromJson(const nlohmann::json &j) {
  Seq2SeqExample ex;
  ex.input = j.at("input").get<std::string>();
  if (j.contains("output") && !j.at("output").is_null()) {
    ex.output = j.at("output").get<std::string>();
  }
  ex.id = j.at("id").get<std::string>();
  ex.role = j.at("role").get<std::string>();
  ex.mention = j.value("mention", std::size_t{0});
  ex.event_type = j.value("event_type", std::string());
  if (j.contains("trigger")) {
    ex.trigger = {j.at("trigger").at("start").get<std::size_t>(),
                  j.at("trigger").at("end").get<std::size_t>()};
  }
  if (ex.input.empty()) throw ValidationError("example " + ex.id + ": empty input");
  return ex;
}

void WriteExamples(std::ostream &out,
                   const std::vector<Seq2SeqExample> &examples) {
  for (const Seq2SeqExample &ex : examples) {
    out << ExampleToJson(ex).dump() << '\n';
  }
}

std::vector<nlohmann::json> ReadJsonLines(std::istream &in,
                                          std::string_view source) {
  std::vector<nlohmann::json> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error &e) {
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) +
                       ": " + e.what());
    }
  }
  return out;
}

std::vector<nlohmann::json> LoadJsonLines(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return ReadJsonLines(in, path.string());
}

std::vector<Seq2SeqExample> ReadExamples(std::istream &in,
                                         std::string_view source) {
  std::vector<Seq2SeqExample> out;
  std::size_t n = 0;
  for (const nlohmann::json &j : ReadJsonLines(in, source)) {
    ++n;
    try {
      out.push_back(ExampleFromJson(j));
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string(source) + ": example " + std::to_string(n) +
                       ": " + e.what());
    }
  }
  return out;
}

std::vector<Seq2SeqExample> LoadExamples(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return ReadExamples(in, path.string());
}

void SaveExamples(const std::filesystem::path &path,
                  const std::vector<Seq2SeqExample> &examples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  WriteExamples(out, examples);
}

}  // namespace qga
