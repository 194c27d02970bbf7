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

// Relation instances, the in-memory corpus index, and the relation record
// file format.
//
// A record is one JSON object per line:
//
//   {"pred":"beat","type1":"organization","type2":"organization",
//    "arg1":"Arsenal","arg2":"Man United",
//    "timexes":[{"start":"2018-03-10","end":"2018-03-10"}],
//    "doc_date":"2018-03-11","doc_id":"a17"}
//
// `timexes` may be empty or absent, `doc_date` may be null or absent. Dates
// are ISO-8601 calendar dates and become day indices (days since
// 1970-01-01) at parse time.

#ifndef TEMPOGRAPH_RELATION_H_
#define TEMPOGRAPH_RELATION_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tempograph {

// Day index: whole days since 1970-01-01.
using Day = int64_t;

// Closed day interval [start, end].
struct TimeInterval {
  Day start = 0;
  Day end = 0;

  friend bool operator==(const TimeInterval &, const TimeInterval &) = default;
  friend auto operator<=>(const TimeInterval &, const TimeInterval &) = default;
};

// Parses "YYYY-MM-DD". Returns nullopt for anything else, including
// impossible dates such as 2019-02-30.
std::optional<Day> ParseIsoDate(std::string_view text);
std::string FormatIsoDate(Day day);

// A typed predicate. Equality is exact string equality on all three parts.
struct PredicateId {
  std::string name;
  std::string type1;
  std::string type2;

  // "type1#type2"
  std::string TypePair() const { return type1 + "#" + type2; }

  friend bool operator==(const PredicateId &, const PredicateId &) = default;
  friend auto operator<=>(const PredicateId &, const PredicateId &) = default;
};

// Ordered argument pair; (A,B) and (B,A) are distinct features.
struct EntityPairId {
  std::string arg1;
  std::string arg2;

  friend bool operator==(const EntityPairId &, const EntityPairId &) = default;
  friend auto operator<=>(const EntityPairId &, const EntityPairId &) = default;
};

struct RelationInstance {
  PredicateId predicate;
  EntityPairId entity_pair;
  std::vector<TimeInterval> timex_intervals;
  std::optional<Day> doc_date;
  std::string doc_id;

  friend bool operator==(const RelationInstance &,
                         const RelationInstance &) = default;
};

// Dense indices into a Corpus' predicate and entity-pair tables. Both tables
// are sorted, so indices do not depend on input order.
using PredicateIndex = uint32_t;
using PairIndex = uint32_t;

// Immutable corpus of relation instances plus the predicate x entity-pair
// index. Every instance belongs to exactly one cell (predicate, pair).
class Corpus {
 public:
  struct Cell {
    PredicateIndex predicate;
    PairIndex pair;
    std::vector<uint32_t> instances;  // indices into instances()
  };

  Corpus() = default;
  explicit Corpus(std::vector<RelationInstance> instances);

  const std::vector<RelationInstance> &instances() const { return instances_; }
  size_t size() const { return instances_.size(); }
  bool empty() const { return instances_.empty(); }

  size_t num_predicates() const { return predicates_.size(); }
  size_t num_pairs() const { return pairs_.size(); }
  const PredicateId &predicate(PredicateIndex p) const { return predicates_[p]; }
  const EntityPairId &pair(PairIndex ep) const { return pairs_[ep]; }
  const std::vector<PredicateId> &predicates() const { return predicates_; }

  std::optional<PredicateIndex> FindPredicate(const PredicateId &id) const;
  std::optional<PairIndex> FindPair(const EntityPairId &id) const;

  // Cells sorted by (pair, predicate).
  const std::vector<Cell> &cells() const { return cells_; }
  // Cells at entity pair `ep`, sorted by predicate.
  std::span<const Cell> CellsForPair(PairIndex ep) const;
  // Indices into cells() of the cells of predicate `p`, sorted by pair.
  const std::vector<uint32_t> &CellsForPredicate(PredicateIndex p) const {
    return cells_by_predicate_[p];
  }

  // Raw event counts c(p, ep), c(p), c(ep). Count() is 0 for absent cells.
  int64_t Count(PredicateIndex p, PairIndex ep) const;
  int64_t PredicateCount(PredicateIndex p) const { return predicate_counts_[p]; }
  int64_t PairCount(PairIndex ep) const { return pair_counts_[ep]; }

  // Distinct "type1#type2" labels present, sorted.
  std::vector<std::string> TypePairs() const;

 private:
  std::vector<RelationInstance> instances_;
  std::vector<PredicateId> predicates_;
  std::vector<EntityPairId> pairs_;
  std::vector<Cell> cells_;
  std::vector<uint32_t> pair_offsets_;  // num_pairs + 1 offsets into cells_
  std::vector<std::vector<uint32_t>> cells_by_predicate_;
  std::vector<int64_t> predicate_counts_;
  std::vector<int64_t> pair_counts_;
};

struct LoadOptions {
  // Keep only records whose "type1#type2" equals this label.
  std::optional<std::string> type_filter;
  // Treat malformed lines as fatal instead of skipping them.
  bool strict = false;
};

struct LoadResult {
  Corpus corpus;
  std::vector<std::string> warnings;  // "line N: reason"
  size_t filtered_out = 0;
};

// Parses a single record line. Throws DataError describing the problem.
RelationInstance ParseRecord(std::string_view line);
std::string FormatRecord(const RelationInstance &inst);

LoadResult LoadCorpus(std::istream &in, const LoadOptions &options = {});
// Throws DataError if the file cannot be opened.
LoadResult LoadCorpusFile(const std::string &path,
                          const LoadOptions &options = {});

void WriteRecords(std::ostream &out, std::span<const RelationInstance> records);

struct CorpusStats {
  size_t num_instances = 0;
  size_t num_predicates = 0;
  size_t num_pairs = 0;
  size_t num_timexed = 0;
  double timex_coverage = 0.0;  // num_timexed / num_instances, 0 if empty
};

CorpusStats ComputeStats(const Corpus &corpus);

}  // namespace tempograph

#endif  // TEMPOGRAPH_RELATION_H_
