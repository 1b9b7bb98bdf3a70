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

#include "qga/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "qga/error.h"
#include "qga/utf8.h"

namespace qga {
namespace {

using nlohmann::json;

std::size_t ReadOffset(const json &j, const char *key) {
  const json &v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ValidationError(std::string("'") + key +
                          "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Span ReadSpan(const json &j) { return {ReadOffset(j, "start"), ReadOffset(j, "end")}; }

void CheckSpan(const Utf8Text &text, Span span, const std::string &what) {
  if (span.start >= span.end || span.end > text.size()) {
    throw ValidationError(what + " span [" + std::to_string(span.start) +
                          ", " + std::to_string(span.end) +
                          ") is empty or outside the sentence (length " +
                          std::to_string(text.size()) + ")");
  }
}

}  // namespace

SentenceRecord RecordFromJson(const json &j) {
  SentenceRecord record;
  record.id = j.at("id").get<std::string>();
  try {
    record.text = j.at("text").get<std::string>();
    Utf8Text text(record.text);
    for (const json &m : j.value("mentions", json::array())) {
      EventMention mention;
      mention.event_type = m.at("event_type").get<std::string>();
      mention.trigger = ReadSpan(m.at("trigger"));
      CheckSpan(text, mention.trigger, "trigger");
      if (m.at("trigger").contains("surface")) {
        auto surface = m.at("trigger").at("surface").get<std::string>();
        if (surface != text.Slice(mention.trigger.start, mention.trigger.end)) {
          throw ValidationError("trigger surface \"" + surface +
                                "\" does not match its offsets");
        }
      }
      for (const json &a : m.value("arguments", json::array())) {
        ArgumentSpan arg;
        arg.start = ReadOffset(a, "start");
        arg.end = ReadOffset(a, "end");
        arg.role = a.at("role").get<std::string>();
        CheckSpan(text, {arg.start, arg.end}, "argument " + arg.role);
        std::string slice(text.Slice(arg.start, arg.end));
        if (a.contains("surface")) {
          arg.surface = a.at("surface").get<std::string>();
          if (arg.surface != slice) {
            throw ValidationError("argument surface \"" + arg.surface +
                                  "\" does not match offsets [" +
                                  std::to_string(arg.start) + ", " +
                                  std::to_string(arg.end) + ") = \"" + slice +
                                  "\"");
          }
        } else {
          arg.surface = std::move(slice);
        }
        mention.arguments.push_back(std::move(arg));
      }
      std::stable_sort(mention.arguments.begin(), mention.arguments.end(),
                       [](const ArgumentSpan &a, const ArgumentSpan &b) {
                         return a.start < b.start;
                       });
      record.mentions.push_back(std::move(mention));
    }
  } catch (const ValidationError &e) {
    throw ValidationError("record " + record.id + ": " + e.what());
  } catch (const json::exception &e) {
    throw ParseError("record " + record.id + ": " + e.what());
  }
  return record;
}

Corpus ReadCorpus(std::istream &in, std::string_view source) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error &e) {
      throw ParseError(where + ": " + e.what());
    }
    try {
      corpus.push_back(RecordFromJson(j));
    } catch (const ValidationError &e) {
      throw ValidationError(where + ": " + e.what());
    } catch (const ParseError &e) {
      throw ParseError(where + ": " + e.what());
    } catch (const json::exception &e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return corpus;
}

Corpus LoadCorpus(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open corpus file " + path.string());
  return ReadCorpus(in, path.string());
}

nlohmann::ordered_json RecordToJson(const SentenceRecord &record) {
  nlohmann::ordered_json mentions = nlohmann::ordered_json::array();
  for (const EventMention &m : record.mentions) {
    nlohmann::ordered_json args = nlohmann::ordered_json::array();
    for (const ArgumentSpan &a : m.arguments) {
      args.push_back({{"start", a.start},
                      {"end", a.end},
                      {"role", a.role},
                      {"surface", a.surface}});
    }
    mentions.push_back(
        {{"event_type", m.event_type},
         {"trigger", {{"start", m.trigger.start}, {"end", m.trigger.end}}},
         {"arguments", std::move(args)}});
  }
  return {{"id", record.id},
          {"text", record.text},
          {"mentions", std::move(mentions)}};
}

void WriteCorpus(std::ostream &out, const Corpus &corpus) {
  for (const SentenceRecord &r : corpus) out << RecordToJson(r).dump() << '\n';
}

std::string SliceText(std::string_view text, Span span) {
  Utf8Text t{std::string(text)};
  if (span.start > span.end || span.end > t.size()) {
    throw std::out_of_range("span outside text");
  }
  return std::string(t.Slice(span.start, span.end));
}

std::string MarkTrigger(std::string_view text, Span trigger) {
  Utf8Text t{std::string(text)};
  std::string out;
  out.reserve(text.size() + 4);
  out += t.Slice(0, trigger.start);
  out += "* ";
  out += t.Slice(trigger.start, trigger.end);
  out += " *";
  out += t.Slice(trigger.end, t.size());
  return out;
}

std::vector<ArgumentSpan> ArgumentsForRole(const EventMention &mention,
                                           std::string_view role) {
  std::vector<ArgumentSpan> out;
  for (const ArgumentSpan &a : mention.arguments) {
    if (a.role == role) out.push_back(a);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ArgumentSpan &a, const ArgumentSpan &b) {
                     return a.start < b.start;
                   });
  return out;
}

bool HasRole(const EventMention &mention, std::string_view role) {
  return std::any_of(mention.arguments.begin(), mention.arguments.end(),
                     [&](const ArgumentSpan &a) { return a.role == role; });
}

}  // namespace qga
