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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails or exceeds its runtime limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "qga/backend.h"
#include "qga/corpus.h"
#include "qga/decode.h"
#include "qga/ontology.h"
#include "qga/pipeline.h"
#include "qga/qa_data.h"
#include "qga/question_gen.h"
#include "qga/scoring.h"

namespace qga {
namespace {

using testing::DataPath;

// Collects failed expectations for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string &what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    if (ok()) return std::to_string(count_) + " checks";
    std::string s = std::to_string(failed_) + "/" + std::to_string(count_) + " checks failed:";
    for (const std::string &f : failures_) s += " [" + f + "]";
    return s;
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

const TemplateRegistry &Registry() {
  static const TemplateRegistry registry = LoadRegistry(DataPath("ace_templates.json"));
  return registry;
}

const Corpus &Fixture() {
  static const Corpus corpus = LoadCorpus(DataPath("fixture_corpus.jsonl"));
  return corpus;
}

void GoldenQg(Check &c) {
  SentenceRecord r = testing::AttackRecord();
  Seq2SeqExample ex = EmitQgExample(Registry(), r, 0, "Attacker");
  c.Expect(ex.input ==
               "role: attacker context: That's because coalition fighter jets * "
               "pummeled * this Iraqi position on the hills above Chamchamal and "
               "Iraqi troops made a hasty retreat.",
           "QG input box");
  c.Expect(ex.output && *ex.output == "Who used jets in the attack in hills?", "QG output box");
  c.Expect(SelectGoldQuestion(Registry(), r.mentions[0], r.text, "Attacker").text ==
               "Who used jets in the attack in hills?",
           "gold question");
}

void CandidateEnumeration(Check &c) {
  SentenceRecord r = testing::AttackRecord();
  std::vector<std::string> texts;
  for (const auto &q : CandidateQuestions(Registry(), r.mentions[0], r.text, "Attacker")) {
    texts.push_back(q.text);
  }
  c.Expect(texts == std::vector<std::string>{"Who was the attacking agent?",
                                             "Who used jets in the attack?",
                                             "Who made the attack in hills?",
                                             "Who used jets in the attack in hills?"},
           "four attack sentence candidates");

  std::vector<std::pair<const EventTypeDef *, std::string>> complete;
  for (const EventTypeDef &def : Registry().event_types()) {
    for (const std::string &role : def.roles) {
      if (!ExpectedTemplateCount(Registry(), def.name, role).reduced) {
        complete.push_back({&def, role});
      }
    }
  }
  std::mt19937 rng(545);
  std::uniform_int_distribution<std::size_t> pick(0, complete.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    auto [def, role] = complete[pick(rng)];
    std::string text;
    EventMention m = testing::RandomMention(*def, rng, &text);
    std::vector<std::string> present;
    for (const std::string &o : def->roles) {
      if (o != role && HasRole(m, o)) present.push_back(o);
    }
    std::set<std::set<std::string>> got;
    auto candidates = ApplicableTemplates(Registry(), m, role);
    for (const auto &it : candidates) {
      got.insert({it.tmpl->slot_roles.begin(), it.tmpl->slot_roles.end()});
    }
    auto want = testing::AllSubsets(present);
    c.Expect(candidates.size() == want.size() && got == want,
             def->name + "/" + role + " trial " + std::to_string(trial));
  }
}

void RegistryFidelity(Check &c) {
  TemplateRegistry reg;
  try {
    reg = LoadRegistry(DataPath("ace_templates.json"));
  } catch (const std::exception &e) {
    c.Expect(false, std::string("load: ") + e.what());
    return;
  }
  c.Expect(reg.event_types().size() == 33, "33 event types");
  c.Expect(reg.template_count() == 578, "578 templates");
  std::vector<std::string> texts;
  for (const auto &t : reg.Templates("Conflict.Attack", "Attacker")) texts.push_back(t.text);
  c.Expect(texts == std::vector<std::string>{
                        "Who was the attacking agent?",
                        "Who attacked [Target]?",
                        "Who used [Instrument] in the attack?",
                        "Who made the attack in [Place]?",
                        "Who attacked [Target] using [Instrument]?",
                        "Who attacked [Target] in [Place]?",
                        "Who used [Instrument] in the attack in [Place]?",
                        "Who attacked [Target] using [Instrument] in [Place]?"},
           "attacker table");
}

void DecodeRoundTrip(Check &c) {
  std::vector<std::string> cands = ParseAnswer("diplomats; convoy; victims </s>", "</s>");
  DecodedArguments d = AlignSpans(cands, testing::kInjureText);
  c.Expect(d.spans.size() == 3, "three spans");
  for (std::size_t i = 0; i < d.spans.size(); ++i) {
    c.Expect(d.spans[i].surface == cands[i], "surface " + cands[i]);
    if (i > 0) c.Expect(d.spans[i - 1].start < d.spans[i].start, "increasing");
  }
  c.Expect(d.spans.size() == 3 && d.spans[0].start == 16 && d.spans[1].start == 32 &&
               d.spans[2].start == 99,
           "offsets 16/32/99");

  std::mt19937 rng(1000);
  const char *words[] = {"ab", "ba", "é", "b", "a b", "zz", "aé"};
  const char *alphabet[] = {"a", "b", " ", "é", "z"};
  std::uniform_int_distribution<int> w(0, 6), ch(0, 4), tlen(0, 25), ncand(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text;
    for (int n = tlen(rng); n > 0; --n) text += alphabet[ch(rng)];
    std::vector<std::string> candidates;
    for (int n = ncand(rng); n > 0; --n) candidates.push_back(words[w(rng)]);
    DecodedArguments g = AlignSpans(candidates, text);
    bool ok = g.spans.size() + g.discarded.size() == candidates.size();
    for (std::size_t i = 0; i < g.spans.size(); ++i) {
      ok = ok && SliceText(text, {g.spans[i].start, g.spans[i].end}) == g.spans[i].surface;
      if (i > 0) ok = ok && g.spans[i - 1].start < g.spans[i].start;
    }
    c.Expect(ok, "generated case " + std::to_string(trial));
  }

  for (const SentenceRecord &r : Fixture()) {
    for (const EventMention &m : r.mentions) {
      std::set<std::string> roles;
      for (const auto &a : m.arguments) roles.insert(a.role);
      for (const std::string &role : roles) {
        auto gold = ArgumentsForRole(m, role);
        DecodedArguments back = DecodeAnswer(SerializeAnswer(gold) + " </s>", r.text, role);
        c.Expect(back.spans == gold && back.discarded.empty(), r.id + "/" + role);
      }
    }
  }
}

void OracleEndToEnd(Check &c) {
  OracleBook book = BuildOracleBook(Registry(), Fixture());
  {
    OracleBackend oracle(book);
    PipelineResult r = RunPipeline(Registry(), Fixture(), Fixture(), oracle, {});
    c.Expect(r.report.arg_i.f1 == 1.0, "Arg-I F1 = 1");
    c.Expect(r.report.arg_c.f1 == 1.0, "Arg-C F1 = 1");
  }
  // Corrupt the attack sentence Attacker answer: 87 gold arguments, one lost.
  const std::string key = FormatQaInput("Who used jets in the attack in hills?", "pummeled",
                                        testing::kAttackText);
  c.Expect(book.Find(key) != nullptr && *book.Find(key) == "coalition </s>", "book entry");
  book.Add(key, "xyzzy </s>");
  OracleBackend oracle(book);
  PipelineResult r = RunPipeline(Registry(), Fixture(), Fixture(), oracle, {});
  c.Expect(r.report.arg_c.gold_count == 87, "87 gold arguments");
  c.Expect(std::abs(r.report.arg_c.recall - 86.0 / 87.0) <= 1e-12, "Arg-C recall 86/87");
  c.Expect(std::abs(r.report.arg_i.recall - 86.0 / 87.0) <= 1e-12, "Arg-I recall 86/87");
  c.Expect(r.report.arg_c.precision == 1.0, "precision unchanged");
}

ArgumentUnit ArgSymbol(int s) {
  return {"r", static_cast<std::size_t>(s / 2), static_cast<std::size_t>(s / 2 + 1),
          "Conflict.Attack", s % 2 ? "Target" : "Attacker", ""};
}

void ScorerCorrectness(Check &c) {
  std::size_t instances = 0, mismatches = 0, order_violations = 0;
  testing::ForEachMultiset(4, 5, [&](const std::vector<int> &pc) {
    testing::ForEachMultiset(4, 5, [&](const std::vector<int> &gc) {
      std::vector<ArgumentUnit> pred, gold;
      std::vector<TriggerUnit> tpred, tgold;
      for (int k = 0; k < 4; ++k) {
        for (int i = 0; i < pc[k]; ++i) pred.push_back(ArgSymbol(k));
        for (int i = 0; i < gc[k]; ++i) gold.push_back(ArgSymbol(k));
      }
      for (const auto &u : pred) tpred.push_back({u.id, u.start, u.end, u.role});
      for (const auto &u : gold) tgold.push_back({u.id, u.start, u.end, u.role});
      ArgumentScores s = ScoreArguments(pred, gold);
      TriggerScores t = ScoreTriggers(tpred, tgold);
      auto same_span = [&](std::size_t i, std::size_t j) { return pred[i].start == gold[j].start; };
      auto same_all = [&](std::size_t i, std::size_t j) {
        return pred[i].start == gold[j].start && pred[i].role == gold[j].role;
      };
      std::size_t bi = testing::BruteForceMaxMatching(pred.size(), gold.size(), same_span);
      std::size_t bc = testing::BruteForceMaxMatching(pred.size(), gold.size(), same_all);
      if (s.identification.tp != bi || s.classification.tp != bc ||
          t.identification.tp != bi || t.classification.tp != bc) {
        ++mismatches;
      }
      if (s.classification.tp > s.identification.tp ||
          t.classification.tp > t.identification.tp) {
        ++order_violations;
      }
      ++instances;
    });
  });
  c.Expect(instances == 126 * 126, "instance count");
  c.Expect(mismatches == 0, std::to_string(mismatches) + " brute-force mismatches");
  c.Expect(order_violations == 0, "c.tp <= i.tp");

  std::vector<TriggerUnit> gold{{"s", 0, 1, "A"}, {"s", 2, 3, "A"}, {"s", 4, 5, "A"}, {"s", 6, 7, "A"}};
  std::vector<TriggerUnit> pred{{"s", 0, 1, "A"}, {"s", 2, 3, "A"}, {"s", 8, 9, "A"}};
  c.Expect(std::abs(ScoreTriggers(pred, gold).classification.f1 - 4.0 / 7.0) <= 1e-12,
           "F1 = 4/7");
}

void AugmentationAccounting(Check &c) {
  std::size_t augmented = 0, expected = 0, one_per_role = 0;
  for (const SentenceRecord &r : Fixture()) {
    for (std::size_t mi = 0; mi < r.mentions.size(); ++mi) {
      const EventMention &m = r.mentions[mi];
      const EventTypeDef *def = Registry().FindEventType(m.event_type);
      if (def == nullptr) continue;
      for (const std::string &role : def->roles) {
        std::size_t present = 0;
        for (const std::string &o : def->roles) {
          if (o != role && HasRole(m, o)) ++present;
        }
        std::size_t n = EmitQaTraining(Registry(), r, mi, role).size();
        augmented += n;
        ++one_per_role;
        if (!ExpectedTemplateCount(Registry(), m.event_type, role).reduced) {
          expected += std::size_t{1} << present;
        } else {
          expected += n;
        }
      }
    }
  }
  c.Expect(augmented == expected, "sum of 2^m");
  c.Expect(augmented == 463, "463 augmented examples");
  c.Expect(one_per_role == 103, "103 role questions");
  c.Expect(augmented >= one_per_role, "augmentation grows the set");
}

void RougeOne(Check &c) {
  c.Expect(std::abs(Rouge1("who attacked the hills", "who attacked the hills") - 1.0) <= 1e-9,
           "identity");
  c.Expect(std::abs(Rouge1("alpha beta", "gamma delta")) <= 1e-9, "disjoint");
  c.Expect(std::abs(Rouge1("who attacked hills", "who attacked the hills") - 6.0 / 7.0) <= 1e-9,
           "6/7");
}

struct Criterion {
  const char *name;
  double limit_seconds;  // <= 0 means no limit
  std::function<void(Check &)> run;
};

}  // namespace
}  // namespace qga

int main() {
  using namespace qga;
  const std::vector<Criterion> criteria = {
      {"golden QG example", 1.0, GoldenQg},
      {"candidate enumeration", 10.0, CandidateEnumeration},
      {"registry fidelity", 0.0, RegistryFidelity},
      {"decode round-trip", 10.0, DecodeRoundTrip},
      {"oracle end-to-end", 5.0, OracleEndToEnd},
      {"scorer correctness", 0.0, ScorerCorrectness},
      {"augmentation accounting", 0.0, AugmentationAccounting},
      {"ROUGE-1", 0.0, RougeOne},
  };
  // Load shared inputs outside the timed sections.
  try {
    Registry();
    Fixture();
  } catch (const std::exception &e) {
    std::printf("FAIL  setup: %s\n", e.what());
    return 1;
  }
  int failed = 0;
  for (const Criterion &cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception &e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = cr.limit_seconds <= 0 || secs < cr.limit_seconds;
    bool pass = check.ok() && in_time;
    if (!pass) ++failed;
    char limit[32] = "none";
    if (cr.limit_seconds > 0) std::snprintf(limit, sizeof(limit), "%.0fs", cr.limit_seconds);
    std::printf("%s  %-24s %.3fs (limit %s)  %s%s\n", pass ? "PASS" : "FAIL", cr.name, secs,
                limit, check.Summary().c_str(), in_time ? "" : " [over time limit]");
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
