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

// Typed entailment graph assembly and the graph file format.
//
// File layout (tab separated, one record per line):
//
//   tempograph-graph  1
//   type_pair         organization#organization
//   time_source       both
//   window            4
//   window_mode       both
//   denominator       unfiltered
//   measures          <id> <id> ...
//   nodes             <count>
//   <predicate>                      (one line per node, sorted)
//   edges             <count>
//   <premise> <hypothesis> <score>...  (sorted by node order)
//
// Scores are written with 17 significant digits so that reading a file back
// reproduces the in-memory doubles exactly. Gzip-compressed files are
// accepted on read.

#ifndef TEMPOGRAPH_GRAPH_H_
#define TEMPOGRAPH_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tempograph/relation.h"
#include "tempograph/similarity.h"
#include "tempograph/time_interval.h"

namespace tempograph {

struct GraphHeader {
  std::string type_pair;
  std::string time_source;
  int64_t window = 0;
  std::string window_mode;
  std::string denominator;
  std::vector<std::string> measures;

  friend bool operator==(const GraphHeader &, const GraphHeader &) = default;
};

struct GraphEdge {
  uint32_t from;
  uint32_t to;
  std::vector<double> scores;  // parallel to header.measures

  friend bool operator==(const GraphEdge &, const GraphEdge &) = default;
};

struct EntailmentGraph {
  GraphHeader header;
  std::vector<std::string> nodes;  // sorted, unique
  std::vector<GraphEdge> edges;    // sorted by (from, to), from != to

  std::optional<uint32_t> FindNode(const std::string &name) const;
  const GraphEdge *FindEdge(uint32_t from, uint32_t to) const;
  // Index of a measure id in header.measures.
  std::optional<size_t> MeasureIndex(const std::string &id) const;
  // Score of premise -> hypothesis, 0 when either node or the edge is absent.
  double ScoreOf(const std::string &premise, const std::string &hypothesis,
                 size_t measure) const;

  friend bool operator==(const EntailmentGraph &, const EntailmentGraph &) = default;
};

struct GraphOptions {
  TimeSource source = TimeSource::kTimexAndDocDate;
  Window window{4, WindowMode::kBoth};
  std::vector<MeasureSpec> measures = DefaultMeasures();
  Denominator denominator = Denominator::kUnfiltered;
  // Predicates with fewer events are left out of the graph.
  int64_t min_count = 0;
  int threads = 1;
};

// Predicates with c(p) >= min_count. Empty when min_count <= 0 (all active).
std::vector<bool> ActivePredicates(const Corpus &corpus, int64_t min_count);

// Counts, temporal filtering and scoring in one go. The corpus must hold a
// single type pair. Throws DataError for an empty or mixed-type corpus.
EntailmentGraph BuildGraph(const Corpus &corpus, const GraphOptions &options);

// Wraps an already computed score matrix.
EntailmentGraph AssembleGraph(const Corpus &corpus, const ScoreMatrix &scores,
                              const GraphOptions &options);

void WriteGraph(std::ostream &out, const EntailmentGraph &graph);
void WriteGraphFile(const std::string &path, const EntailmentGraph &graph);
// Throws DataError with a line number on malformed input.
EntailmentGraph ReadGraph(std::istream &in);
EntailmentGraph ReadGraphFile(const std::string &path);

}  // namespace tempograph

#endif  // TEMPOGRAPH_GRAPH_H_
