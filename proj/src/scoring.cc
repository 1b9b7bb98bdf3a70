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

#include "qga/scoring.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "qga/utf8.h"

namespace qga {
namespace {

template <typename Key>
std::size_t MatchCount(const std::vector<Key> &pred, const std::vector<Key> &gold) {
  std::map<Key, std::size_t> gold_counts;
  for (const Key &k : gold) ++gold_counts[k];
  std::size_t tp = 0;
  for (const Key &k : pred) {
    auto it = gold_counts.find(k);
    if (it != gold_counts.end() && it->second > 0) {
      --it->second;
      ++tp;
    }
  }
  return tp;
}

using TriggerIdKey = std::tuple<std::string, std::size_t, std::size_t>;
using TriggerCKey = std::tuple<std::string, std::size_t, std::size_t, std::string>;
using ArgCKey =
    std::tuple<std::string, std::size_t, std::size_t, std::string, std::string>;

std::vector<std::string> Tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in(AsciiLower(text));
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Prf MakePrf(std::size_t tp, std::size_t pred_count, std::size_t gold_count) {
  Prf p;
  p.tp = tp;
  p.pred_count = pred_count;
  p.gold_count = gold_count;
  p.precision = pred_count == 0 ? 0.0 : static_cast<double>(tp) / pred_count;
  p.recall = gold_count == 0 ? 0.0 : static_cast<double>(tp) / gold_count;
  double sum = p.precision + p.recall;
  p.f1 = sum == 0.0 ? 0.0 : 2.0 * p.precision * p.recall / sum;
  return p;
}

TriggerScores ScoreTriggers(const std::vector<TriggerUnit> &pred,
                            const std::vector<TriggerUnit> &gold) {
  std::vector<TriggerIdKey> pid, gid;
  std::vector<TriggerCKey> pc, gc;
  for (const TriggerUnit &u : pred) {
    pid.emplace_back(u.id, u.start, u.end);
    pc.emplace_back(u.id, u.start, u.end, u.event_type);
  }
  for (const TriggerUnit &u : gold) {
    gid.emplace_back(u.id, u.start, u.end);
    gc.emplace_back(u.id, u.start, u.end, u.event_type);
  }
  return {MakePrf(MatchCount(pid, gid), pred.size(), gold.size()),
          MakePrf(MatchCount(pc, gc), pred.size(), gold.size())};
}

ArgumentScores ScoreArguments(const std::vector<ArgumentUnit> &pred,
                              const std::vector<ArgumentUnit> &gold) {
  std::vector<TriggerCKey> pi, gi;
  std::vector<ArgCKey> pc, gc;
  for (const ArgumentUnit &u : pred) {
    pi.emplace_back(u.id, u.start, u.end, u.event_type);
    pc.emplace_back(u.id, u.start, u.end, u.event_type, u.role);
  }
  for (const ArgumentUnit &u : gold) {
    gi.emplace_back(u.id, u.start, u.end, u.event_type);
    gc.emplace_back(u.id, u.start, u.end, u.event_type, u.role);
  }
  return {MakePrf(MatchCount(pi, gi), pred.size(), gold.size()),
          MakePrf(MatchCount(pc, gc), pred.size(), gold.size())};
}

ScoreReport Score(const std::vector<TriggerUnit> &pred_triggers,
                  const std::vector<TriggerUnit> &gold_triggers,
                  const std::vector<ArgumentUnit> &pred_args,
                  const std::vector<ArgumentUnit> &gold_args) {
  TriggerScores t = ScoreTriggers(pred_triggers, gold_triggers);
  ArgumentScores a = ScoreArguments(pred_args, gold_args);
  return {t.identification, t.classification, a.identification,
          a.classification};
}

std::vector<TriggerUnit> TriggerUnits(const Corpus &corpus) {
  std::vector<TriggerUnit> out;
  for (const SentenceRecord &r : corpus) {
    for (const EventMention &m : r.mentions) {
      out.push_back({r.id, m.trigger.start, m.trigger.end, m.event_type});
    }
  }
  return out;
}

std::vector<ArgumentUnit> ArgumentUnits(const Corpus &corpus) {
  std::vector<ArgumentUnit> out;
  for (const SentenceRecord &r : corpus) {
    for (const EventMention &m : r.mentions) {
      for (const ArgumentSpan &a : m.arguments) {
        out.push_back({r.id, a.start, a.end, m.event_type, a.role, a.surface});
      }
    }
  }
  return out;
}

nlohmann::ordered_json ArgumentUnitToJson(const ArgumentUnit &unit) {
  nlohmann::ordered_json j;
  j["id"] = unit.id;
  j["event_type"] = unit.event_type;
  j["role"] = unit.role;
  j["start"] = unit.start;
  j["end"] = unit.end;
  j["surface"] = unit.surface;
  return j;
}

ArgumentUnit ArgumentUnitFromJson(const nlohmann::json &j) {
  ArgumentUnit u;
  u.id = j.at("id").get<std::string>();
  u.event_type = j.at("event_type").get<std::string>();
  u.role = j.at("role").get<std::string>();
  u.start = j.at("start").get<std::size_t>();
  u.end = j.at("end").get<std::size_t>();
  u.surface = j.value("surface", std::string());
  return u;
}

nlohmann::ordered_json PrfToJson(const Prf &prf) {
  nlohmann::ordered_json j;
  j["precision"] = prf.precision;
  j["recall"] = prf.recall;
  j["f1"] = prf.f1;
  j["tp"] = prf.tp;
  j["pred_count"] = prf.pred_count;
  j["gold_count"] = prf.gold_count;
  return j;
}

nlohmann::ordered_json ScoreReport::ToJson() const {
  nlohmann::ordered_json j;
  j["trigger_id"] = PrfToJson(trigger_id);
  j["trigger_c"] = PrfToJson(trigger_c);
  j["arg_i"] = PrfToJson(arg_i);
  j["arg_c"] = PrfToJson(arg_c);
  return j;
}

std::string ScoreReport::ToTable() const {
  std::string out = "metric          P       R       F1      tp/pred/gold\n";
  auto row = [&out](const char *name, const Prf &p) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-14s %6.2f  %6.2f  %6.2f   %zu/%zu/%zu\n",
                  name, 100 * p.precision, 100 * p.recall, 100 * p.f1, p.tp,
                  p.pred_count, p.gold_count);
    out += buf;
  };
  row("Trigger-I", trigger_id);
  row("Trigger-C", trigger_c);
  row("Arg-I", arg_i);
  row("Arg-C", arg_c);
  return out;
}

double Rouge1(std::string_view candidate, std::string_view reference) {
  std::vector<std::string> cand = Tokens(candidate);
  std::vector<std::string> ref = Tokens(reference);
  if (cand.empty() && ref.empty()) return 1.0;
  if (cand.empty() || ref.empty()) return 0.0;
  std::map<std::string, std::size_t> ref_counts;
  for (const std::string &t : ref) ++ref_counts[t];
  std::size_t overlap = 0;
  for (const std::string &t : cand) {
    auto it = ref_counts.find(t);
    if (it != ref_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  double p = static_cast<double>(overlap) / cand.size();
  double r = static_cast<double>(overlap) / ref.size();
  return 2.0 * p * r / (p + r);
}

}  // namespace qga
