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

// Seeded synthetic sports-league corpora with known ground truth.
//
// Teams play a repeated round-robin schedule. Every match is reported by a
// fixed number of articles, each dated a few days after the match, and each
// article yields one play relation and one outcome relation told from the
// article's perspective: win predicates take (winner, loser), lose
// predicates (loser, winner), tie predicates either order. The play
// relation uses the same argument order as the outcome relation of its
// article.

#ifndef TEMPOGRAPH_LEAGUE_H_
#define TEMPOGRAPH_LEAGUE_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tempograph/evaluation.h"
#include "tempograph/relation.h"

namespace tempograph {

struct LeagueConfig {
  int num_teams = 8;
  int num_matchdays = 21;
  int matchday_spacing = 7;  // days between rounds
  int articles_per_match = 3;
  int report_lag_max = 2;  // article date = match date + U[0, lag_max]
  double timex_probability = 0.19;
  // Outcome of the home side: win, lose, tie.
  std::array<double, 3> outcome_probabilities{0.45, 0.30, 0.25};
  // If non-empty, match k takes outcome forced_outcomes[k % size] (home
  // perspective; play is not allowed) instead of a random draw.
  std::vector<OutcomeClass> forced_outcomes;
  ParaphraseClusters lexicon = DefaultLexicon();
  std::string entity_type = "organization";
  Day start_day = 15979;  // 2013-10-01
  uint64_t seed = 1;

  static ParaphraseClusters DefaultLexicon();
};

// Throws UsageError for invalid values.
void ValidateConfig(const LeagueConfig &config);

// JSON object with any subset of the fields above; missing fields keep
// their defaults. `lexicon` maps class name to a list of predicates; each
// entry is a string or {"pred": ..., "specific": true}. `start_date` is an
// ISO date. Throws UsageError.
LeagueConfig ParseLeagueConfig(std::istream &in);
LeagueConfig LoadLeagueConfigFile(const std::string &path);

struct Match {
  int home;
  int away;
  Day date;
  OutcomeClass outcome;  // from the home side: win, lose or tie
};

struct GroundTruth {
  std::vector<std::string> teams;
  std::vector<Match> matches;
  // Gold labels for the lexicon's predicates.
  std::vector<EntailmentPair> pairs;
};

struct SyntheticCorpus {
  std::vector<RelationInstance> instances;
  GroundTruth truth;
};

SyntheticCorpus GenerateLeague(const LeagueConfig &config);

// `index \t date \t home \t away \t outcome`
void WriteMatches(std::ostream &out, const GroundTruth &truth);

}  // namespace tempograph

#endif  // TEMPOGRAPH_LEAGUE_H_
