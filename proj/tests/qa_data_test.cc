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

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "qga/qa_data.h"
#include "qga/seq2seq.h"

namespace qga {
namespace {

const TemplateRegistry &Shipped() {
  static const TemplateRegistry registry =
      LoadRegistry(testing::DataPath("ace_templates.json"));
  return registry;
}

TEST_SUITE("qa_data") {

TEST_CASE("trigger clause") {
  CHECK(AttachTriggerClause("Who was harmed?", "injured") ==
        "Who was harmed in * injured * event?");
  CHECK(AttachTriggerClause("What device was used to inflict the harm?", "injured") ==
        "What device was used to inflict the harm in * injured * event?");
  CHECK(AttachTriggerClause("Who attacked hills?", "pummeled") ==
        "Who attacked hills in * pummeled * event?");
  CHECK(HasTriggerClause("Who was harmed in * injured * event?"));
  CHECK_FALSE(HasTriggerClause("Who was harmed?"));
}

TEST_CASE("trigger clause preconditions") {
  CHECK_THROWS_AS(AttachTriggerClause("Who was harmed", "injured"), std::invalid_argument);
  CHECK_THROWS_AS(AttachTriggerClause("", "injured"), std::invalid_argument);
  CHECK_THROWS_AS(AttachTriggerClause("Who was harmed in * injured * event?", "injured"),
                  std::invalid_argument);
}

TEST_CASE("serialize answer") {
  const EventMention m = testing::InjureRecord().mentions[0];
  CHECK(SerializeAnswer(m.arguments) == "diplomats; convoy; victims");
  CHECK(SerializeAnswer({}) == "");
  CHECK(SerializeAnswer({{15, 24, "Attacker", "coalition"}}) == "coalition");
}

TEST_CASE("qa input for the injure sentence") {
  SentenceRecord r = testing::InjureRecord();
  CHECK(FormatQaInput("Who was harmed?", "Injured", r.text) ==
        "question: Who was harmed in * Injured * event? context: Injured Russian "
        "diplomats and a convoy of America's Kurdish comrades in arms were among "
        "unintended victims caught in crossfire and friendly fire Sunday.");
  auto examples = EmitQaTraining(Shipped(), r, 0, "Victim");
  REQUIRE(!examples.empty());
  CHECK(examples[0].input.rfind("question: Who was harmed in * Injured * event? context: ", 0) == 0);
  CHECK(*examples[0].output == "diplomats; convoy; victims");
}

TEST_CASE("attack sentence training examples") {
  SentenceRecord r = testing::AttackRecord();
  auto examples = EmitQaTraining(Shipped(), r, 0, "Attacker");
  REQUIRE(examples.size() == 4);
  for (const auto &ex : examples) {
    CHECK(*ex.output == "coalition");
    CHECK(ex.id == "pummel");
    CHECK(ex.role == "Attacker");
    CHECK(ex.event_type == "Conflict.Attack");
  }
  CHECK(examples[3].input ==
        "question: Who used jets in the attack in hills in * pummeled * event? context: "
        "That's because coalition fighter jets pummeled this Iraqi position on the hills "
        "above Chamchamal and Iraqi troops made a hasty retreat.");
  // Target is absent: augmentation still runs over present other roles.
  auto target = EmitQaTraining(Shipped(), r, 0, "Target");
  CHECK(target.size() == 8);
  for (const auto &ex : target) CHECK(*ex.output == "");
}

TEST_CASE("no arguments at all gives a single empty-answer example") {
  SentenceRecord r;
  r.id = "bare";
  r.text = "Troops attacked.";
  r.mentions.push_back({"Conflict.Attack", {7, 15}, {}});
  auto examples = EmitQaTraining(Shipped(), r, 0, "Attacker");
  REQUIRE(examples.size() == 1);
  CHECK(examples[0].input ==
        "question: Who was the attacking agent in * attacked * event? context: Troops attacked.");
  CHECK(*examples[0].output == "");
}

TEST_CASE("inference input") {
  SentenceRecord r = testing::AttackRecord();
  Seq2SeqExample ex = EmitQaInference("Who used jets in the attack in hills?", r, 0, "Attacker");
  CHECK(ex.input ==
        "question: Who used jets in the attack in hills in * pummeled * event? context: "
        "That's because coalition fighter jets pummeled this Iraqi position on the hills "
        "above Chamchamal and Iraqi troops made a hasty retreat.");
  CHECK_FALSE(ex.output.has_value());
  CHECK(EmitQaInference("Who was the attacking agent?", r, 0, "Attacker")
            .input.rfind("question: Who was the attacking agent in * pummeled * event? context: ", 0) == 0);
  CHECK_THROWS_AS(EmitQaInference("", r, 0, "Attacker"), std::invalid_argument);
  CHECK_THROWS_AS(EmitQaInference("  ", r, 0, "Attacker"), std::invalid_argument);
}

TEST_CASE("examples survive a JSONL round trip") {
  SentenceRecord r = testing::AttackRecord();
  std::vector<Seq2SeqExample> examples = EmitQaTraining(Shipped(), r, 0, "Attacker");
  examples.push_back(EmitQaInference("Who?", r, 0, "Place"));
  std::ostringstream out;
  WriteExamples(out, examples);
  std::istringstream in(out.str());
  CHECK(ReadExamples(in) == examples);
  CHECK(out.str().rfind(R"({"input":"question: )", 0) == 0);
  CHECK(out.str().find(R"("output")") != std::string::npos);
}

TEST_CASE("example json field order and optional output") {
  Seq2SeqExample ex;
  ex.input = "in";
  ex.id = "r";
  ex.role = "Place";
  ex.mention = 1;
  ex.event_type = "E";
  ex.trigger = {2, 3};
  CHECK(ExampleToJson(ex).dump() ==
        R"({"input":"in","id":"r","role":"Place","mention":1,"event_type":"E","trigger":{"start":2,"end":3}})");
  ex.output = "";
  CHECK(ExampleToJson(ex).dump() ==
        R"({"input":"in","output":"","id":"r","role":"Place","mention":1,"event_type":"E","trigger":{"start":2,"end":3}})");
}

}  // TEST_SUITE

}  // namespace
}  // namespace qga
