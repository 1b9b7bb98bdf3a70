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

#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "oracles.h"
#include "qga/corpus.h"
#include "qga/error.h"
#include "qga/utf8.h"

namespace qga {
namespace {

Corpus Parse(const std::string &jsonl) {
  std::istringstream in(jsonl);
  return ReadCorpus(in, "test");
}

std::string ErrorText(const std::string &jsonl) {
  try {
    Parse(jsonl);
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

TEST_SUITE("corpus") {

TEST_CASE("attack sentence record") {
  Corpus c = Parse(
      R"({"id":"pummel","text":"That's because coalition fighter jets pummeled this Iraqi position on the hills above Chamchamal and Iraqi troops made a hasty retreat.","mentions":[{"event_type":"Conflict.Attack","trigger":{"start":38,"end":46},"arguments":[{"start":74,"end":79,"role":"Place"},{"start":15,"end":24,"role":"Attacker","surface":"coalition"},{"start":33,"end":37,"role":"Instrument"}]}]})");
  REQUIRE(c.size() == 1);
  REQUIRE(c[0].mentions.size() == 1);
  CHECK(c[0].mentions[0].arguments.size() == 3);
  CHECK(c[0] == testing::AttackRecord());  // args sorted, surfaces filled in
  CHECK(SliceText(c[0].text, c[0].mentions[0].trigger) == "pummeled");
}

TEST_CASE("fixture corpus") {
  Corpus c = LoadCorpus(testing::DataPath("fixture_corpus.jsonl"));
  CHECK(c.size() == 30);
  std::size_t mentions = 0, args = 0;
  for (const auto &r : c) {
    mentions += r.mentions.size();
    for (const auto &m : r.mentions) {
      args += m.arguments.size();
      for (const auto &a : m.arguments) CHECK(SliceText(r.text, {a.start, a.end}) == a.surface);
    }
  }
  CHECK(mentions == 32);
  CHECK(args == 87);
  CHECK(c[0] == testing::AttackRecord());
  CHECK(c[1] == testing::InjureRecord());
}

TEST_CASE("unicode offsets count scalar values") {
  Corpus c = LoadCorpus(testing::DataPath("fixture_corpus.jsonl"));
  const SentenceRecord *rec = nullptr;
  for (const auto &r : c) {
    if (r.id == "merge-unicode") rec = &r;
  }
  REQUIRE(rec != nullptr);
  CHECK(CharLength(rec->text) == 62);
  CHECK(rec->text.size() == 70);
  const auto &args = rec->mentions[0].arguments;
  CHECK(args[0] == ArgumentSpan{13, 29, "Org", "Société Générale"});
  CHECK(args[1] == ArgumentSpan{33, 48, "Org", "Crédit Lyonnais"});
  CHECK(SliceText(rec->text, rec->mentions[0].trigger) == "fusionné");
}

TEST_CASE("write then read is the identity") {
  Corpus c = LoadCorpus(testing::DataPath("fixture_corpus.jsonl"));
  std::ostringstream out;
  WriteCorpus(out, c);
  CHECK(Parse(out.str()) == c);
}

TEST_CASE("empty input") {
  CHECK(Parse("").empty());
  CHECK(Parse("\n  \n").empty());
}

TEST_CASE("surface mismatch names the record") {
  std::string err = ErrorText(
      R"({"id":"bad-one","text":"Troops fired.","mentions":[{"event_type":"Conflict.Attack","trigger":{"start":7,"end":12},"arguments":[{"start":0,"end":6,"role":"Attacker","surface":"Troop"}]}]})");
  CHECK(err.find("bad-one") != std::string::npos);
  CHECK_THROWS_AS(
      Parse(R"({"id":"bad-one","text":"Troops fired.","mentions":[{"event_type":"Conflict.Attack","trigger":{"start":7,"end":12},"arguments":[{"start":0,"end":6,"role":"Attacker","surface":"Troop"}]}]})"),
      ValidationError);
}

TEST_CASE("span checks") {
  const std::string head = R"({"id":"r","text":"Troops fired.","mentions":[{"event_type":"X","trigger":)";
  CHECK_THROWS_AS(Parse(head + R"({"start":7,"end":7}}]})"), ValidationError);
  CHECK_THROWS_AS(Parse(head + R"({"start":7,"end":14}}]})"), ValidationError);
  CHECK_THROWS_AS(Parse(head + R"({"start":-1,"end":3}}]})"), ValidationError);
  CHECK_THROWS_AS(
      Parse(head + R"({"start":7,"end":12},"arguments":[{"start":3,"end":2,"role":"A"}]}]})"),
      ValidationError);
  CHECK_THROWS_AS(Parse(head + R"({"start":7,"end":12,"surface":"fire"}}]})"), ValidationError);
  CHECK(Parse(head + R"({"start":7,"end":12,"surface":"fired"}}]})").size() == 1);
}

TEST_CASE("malformed line reports its line number") {
  std::string err = ErrorText(R"({"id":"a","text":"x"})" "\n\n{not json\n");
  CHECK(err.find("test:3") != std::string::npos);
  CHECK_THROWS_AS(Parse("{not json"), ParseError);
  CHECK_THROWS_AS(Parse(R"({"text":"no id"})"), ParseError);
  CHECK_THROWS_AS(LoadCorpus("/nonexistent/corpus.jsonl"), ParseError);
}

TEST_CASE("mark trigger") {
  CHECK(MarkTrigger(testing::kAttackText, {38, 46}) ==
        "That's because coalition fighter jets * pummeled * this Iraqi position "
        "on the hills above Chamchamal and Iraqi troops made a hasty retreat.");
  CHECK(MarkTrigger(testing::kInjureText, {0, 7}) ==
        "* Injured * Russian diplomats and a convoy of America's Kurdish comrades "
        "in arms were among unintended victims caught in crossfire and friendly "
        "fire Sunday.");
  CHECK(MarkTrigger("Fired.", {0, 6}) == "* Fired. *");
  CHECK(MarkTrigger("ont fusionné.", {4, 12}) == "ont * fusionné *.");
}

TEST_CASE("mark trigger adds four characters and keeps the rest") {
  std::mt19937 rng(7);
  const char *alphabet[] = {"a", "b", " ", "é", "*"};
  std::uniform_int_distribution<int> pick(0, 4), len(1, 20);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    int n = len(rng);
    for (int i = 0; i < n; ++i) text += alphabet[pick(rng)];
    std::uniform_int_distribution<int> s(0, n - 1);
    std::size_t start = s(rng);
    std::uniform_int_distribution<int> e(static_cast<int>(start) + 1, n);
    Span span{start, static_cast<std::size_t>(e(rng))};
    std::string marked = MarkTrigger(text, span);
    CHECK(CharLength(marked) == CharLength(text) + 4);
    std::u32string a = testing::ToScalars(text), b = testing::ToScalars(marked);
    CHECK(b.substr(0, start) == a.substr(0, start));
    CHECK(b.substr(start, 2) == U"* ");
    CHECK(b.substr(start + 2, span.end - start) == a.substr(start, span.end - start));
    CHECK(b.substr(span.end + 2, 2) == U" *");
    CHECK(b.substr(span.end + 4) == a.substr(span.end));
  }
}

TEST_CASE("arguments for role keep every filler") {
  const EventMention m = testing::InjureRecord().mentions[0];
  CHECK(ArgumentsForRole(m, "Victim").size() == 3);
  CHECK(ArgumentsForRole(m, "Place").empty());
  CHECK(HasRole(m, "Victim"));
  CHECK_FALSE(HasRole(m, "Agent"));
}

}  // TEST_SUITE

}  // namespace
}  // namespace qga
