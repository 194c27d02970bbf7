// Copyright 2026 The Tempograph Authors.
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

#include "tempograph/league.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

#include "json.hpp"
#include "tempograph/errors.h"

namespace tempograph {

namespace {

// Draws with explicit arithmetic on the engine output so that corpora are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  uint64_t Below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, 1).
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool Chance(double p) { return Unit() < p; }

 private:
  std::mt19937_64 engine_;
};

ClusterMember Member(const char *name, bool specific = false) {
  return {name, specific ? Specificity::kSpecific : Specificity::kNonSpecific};
}

// Round-robin pairings by the circle method; index -1 is a bye.
std::vector<std::vector<std::pair<int, int>>> RoundRobin(int num_teams) {
  int m = num_teams + (num_teams % 2);
  std::vector<int> ring;
  for (int t = 1; t < m; ++t) ring.push_back(t < num_teams ? t : -1);
  std::vector<std::vector<std::pair<int, int>>> rounds;
  for (int r = 0; r < m - 1; ++r) {
    std::vector<int> order{0};
    for (int i = 0; i < m - 1; ++i) order.push_back(ring[(i + r) % (m - 1)]);
    std::vector<std::pair<int, int>> games;
    for (int i = 0; i < m / 2; ++i) {
      int a = order[i], b = order[m - 1 - i];
      if (a < 0 || b < 0) continue;
      // Alternate home advantage so no team is always at home.
      if ((i + r) % 2 == 1) std::swap(a, b);
      games.emplace_back(a, b);
    }
    rounds.push_back(std::move(games));
  }
  return rounds;
}

const std::string &Pick(Rng &rng, const std::vector<ClusterMember> &members) {
  return members[rng.Below(members.size())].predicate;
}

}  // namespace

ParaphraseClusters LeagueConfig::DefaultLexicon() {
  ParaphraseClusters c;
  c.of(OutcomeClass::kWin) = {
      Member("beat"),       Member("defeat"),     Member("top"),
      Member("edge"),       Member("crush", true), Member("rout", true),
      Member("thrash", true), Member("outscore"), Member("outplay"),
      Member("overcome"),   Member("down"),       Member("dominate", true),
      Member("blank", true), Member("shut out", true), Member("sweep", true),
      Member("knock off"),  Member("upset", true), Member("outlast"),
      Member("hammer", true), Member("trounce", true), Member("oust", true),
      Member("eliminate", true), Member("dispatch"), Member("topple"),
      Member("overpower"),  Member("win against")};
  c.of(OutcomeClass::kLose) = {
      Member("lose to"),      Member("fall to"),        Member("be beaten by"),
      Member("lose against"), Member("be defeated by"), Member("fall against"),
      Member("succumb to"),   Member("be swept by", true)};
  c.of(OutcomeClass::kTie) = {Member("tie"), Member("draw with"), Member("tie with")};
  c.of(OutcomeClass::kPlay) = {Member("play"), Member("face"), Member("meet"),
                               Member("take on"), Member("vs")};
  return c;
}

void ValidateConfig(const LeagueConfig &c) {
  auto fail = [](const std::string &why) { throw UsageError("league config: " + why); };
  if (c.num_teams < 2) fail("num_teams must be >= 2");
  if (c.num_matchdays < 1) fail("num_matchdays must be >= 1");
  if (c.matchday_spacing < 1) fail("matchday_spacing must be >= 1");
  if (c.articles_per_match < 1) fail("articles_per_match must be >= 1");
  if (c.report_lag_max < 0) fail("report_lag_max must be >= 0");
  if (!(c.timex_probability >= 0.0 && c.timex_probability <= 1.0)) {
    fail("timex_probability must be in [0,1]");
  }
  double sum = 0.0;
  for (double p : c.outcome_probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) fail("outcome probabilities must be in [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) fail("outcome probabilities must sum to 1");
  for (OutcomeClass o : c.forced_outcomes) {
    if (o == OutcomeClass::kPlay) fail("forced outcomes must be win, lose or tie");
  }
  if (c.entity_type.empty()) fail("entity_type must be non-empty");
  try {
    ValidateClusters(c.lexicon);
  } catch (const DataError &e) {
    fail(e.what());
  }
}

LeagueConfig ParseLeagueConfig(std::istream &in) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw UsageError(std::string("league config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("league config must be a JSON object");
  LeagueConfig c;
  try {
    for (const auto &[key, value] : j.items()) {
      if (key == "num_teams") {
        c.num_teams = value.get<int>();
      } else if (key == "num_matchdays") {
        c.num_matchdays = value.get<int>();
      } else if (key == "matchday_spacing") {
        c.matchday_spacing = value.get<int>();
      } else if (key == "articles_per_match") {
        c.articles_per_match = value.get<int>();
      } else if (key == "report_lag_max") {
        c.report_lag_max = value.get<int>();
      } else if (key == "timex_probability") {
        c.timex_probability = value.get<double>();
      } else if (key == "outcome_probabilities") {
        auto v = value.get<std::vector<double>>();
        if (v.size() != 3) throw UsageError("outcome_probabilities needs 3 values");
        c.outcome_probabilities = {v[0], v[1], v[2]};
      } else if (key == "forced_outcomes") {
        c.forced_outcomes.clear();
        for (const auto &o : value) c.forced_outcomes.push_back(ParseClass(o.get<std::string>()));
      } else if (key == "lexicon") {
        ParaphraseClusters lex;
        for (const auto &[cls, list] : value.items()) {
          auto &members = lex.of(ParseClass(cls));
          for (const auto &entry : list) {
            if (entry.is_string()) {
              members.push_back({entry.get<std::string>(), Specificity::kNonSpecific});
            } else {
              members.push_back({entry.at("pred").get<std::string>(),
                                 entry.value("specific", false) ? Specificity::kSpecific
                                                                : Specificity::kNonSpecific});
            }
          }
        }
        c.lexicon = std::move(lex);
      } else if (key == "entity_type") {
        c.entity_type = value.get<std::string>();
      } else if (key == "start_date") {
        auto day = ParseIsoDate(value.get<std::string>());
        if (!day) throw UsageError("start_date must be YYYY-MM-DD");
        c.start_day = *day;
      } else if (key == "seed" || key == "rng_seed") {
        c.seed = value.get<uint64_t>();
      } else {
        throw UsageError("league config: unknown field '" + key + "'");
      }
    }
  } catch (const json::exception &e) {
    throw UsageError(std::string("league config: ") + e.what());
  } catch (const DataError &e) {
    throw UsageError(std::string("league config: ") + e.what());
  }
  ValidateConfig(c);
  return c;
}

LeagueConfig LoadLeagueConfigFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open league config '" + path + "'");
  return ParseLeagueConfig(in);
}

SyntheticCorpus GenerateLeague(const LeagueConfig &config) {
  ValidateConfig(config);
  Rng rng(config.seed);
  SyntheticCorpus out;
  GroundTruth &truth = out.truth;
  for (int t = 0; t < config.num_teams; ++t) {
    char name[32];
    std::snprintf(name, sizeof(name), "team%02d", t + 1);
    truth.teams.push_back(name);
  }

  auto rounds = RoundRobin(config.num_teams);
  const size_t cycle = rounds.size();
  for (int day = 0; day < config.num_matchdays; ++day) {
    const auto &games = rounds[day % cycle];
    // Every other pass through the schedule swaps home and away.
    const bool swap = (day / cycle) % 2 == 1;
    for (auto [home, away] : games) {
      if (swap) std::swap(home, away);
      Match m{home, away, config.start_day + static_cast<Day>(day) * config.matchday_spacing,
              OutcomeClass::kTie};
      if (!config.forced_outcomes.empty()) {
        m.outcome = config.forced_outcomes[truth.matches.size() % config.forced_outcomes.size()];
      } else {
        double u = rng.Unit();
        const auto &p = config.outcome_probabilities;
        m.outcome = u < p[0] ? OutcomeClass::kWin
                    : u < p[0] + p[1] ? OutcomeClass::kLose
                                      : OutcomeClass::kTie;
      }
      truth.matches.push_back(m);
    }
  }

  const auto &lex = config.lexicon;
  for (size_t mi = 0; mi < truth.matches.size(); ++mi) {
    const Match &m = truth.matches[mi];
    int winner = m.outcome == OutcomeClass::kLose ? m.away : m.home;
    int loser = m.outcome == OutcomeClass::kLose ? m.home : m.away;
    for (int a = 0; a < config.articles_per_match; ++a) {
      Day doc_date = m.date + static_cast<Day>(rng.Below(config.report_lag_max + 1));
      int first, second;
      std::string outcome_pred;
      if (m.outcome == OutcomeClass::kTie) {
        bool flip = rng.Chance(0.5);
        first = flip ? m.away : m.home;
        second = flip ? m.home : m.away;
        outcome_pred = Pick(rng, lex.of(OutcomeClass::kTie));
      } else if (rng.Chance(0.5)) {
        first = winner;
        second = loser;
        outcome_pred = Pick(rng, lex.of(OutcomeClass::kWin));
      } else {
        first = loser;
        second = winner;
        outcome_pred = Pick(rng, lex.of(OutcomeClass::kLose));
      }
      std::string play_pred = Pick(rng, lex.of(OutcomeClass::kPlay));

      char doc_id[48];
      std::snprintf(doc_id, sizeof(doc_id), "m%04zu-a%d", mi, a);
      for (const std::string *pred : {&play_pred, &outcome_pred}) {
        RelationInstance inst;
        inst.predicate = {*pred, config.entity_type, config.entity_type};
        inst.entity_pair = {truth.teams[first], truth.teams[second]};
        if (rng.Chance(config.timex_probability)) {
          inst.timex_intervals.push_back({m.date, m.date});
        }
        inst.doc_date = doc_date;
        inst.doc_id = doc_id;
        out.instances.push_back(std::move(inst));
      }
    }
  }
  truth.pairs = GeneratePairs(lex);
  return out;
}

void WriteMatches(std::ostream &out, const GroundTruth &truth) {
  for (size_t i = 0; i < truth.matches.size(); ++i) {
    const Match &m = truth.matches[i];
    out << i << '\t' << FormatIsoDate(m.date) << '\t' << truth.teams[m.home] << '\t'
        << truth.teams[m.away] << '\t' << ClassName(m.outcome) << '\n';
  }
}

}  // namespace tempograph
