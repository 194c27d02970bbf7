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

// Temporally filtered co-occurrence counts.
//
// For each entity pair ep and each pair of distinct predicates p, q seen with
// ep, an event of p at ep is kept for the directed edge p->q if any of its
// time intervals overlaps (under the window) any interval of any q event at
// ep. filtered(p, q, ep) is the number of kept p events. Counts are stored
// per feature because the temporal similarity measures sum over features.

#ifndef TEMPOGRAPH_TEMPORAL_FILTER_H_
#define TEMPOGRAPH_TEMPORAL_FILTER_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tempograph/relation.h"
#include "tempograph/time_interval.h"

namespace tempograph {

struct FilteredFeature {
  PairIndex pair;
  int64_t filtered;  // 0 <= filtered <= c(from, pair)
};

// Directed evidence for from -> to. `features` holds every shared feature of
// the two predicates (including those with a zero filtered count), sorted by
// pair.
struct EdgeEvidence {
  PredicateIndex from = 0;
  PredicateIndex to = 0;
  std::vector<FilteredFeature> features;
  int64_t total_filtered = 0;

  int64_t Filtered(PairIndex pair) const;
};

// All edges, sorted by (from, to). Only predicate pairs that share at least
// one feature are present.
class EvidenceSet {
 public:
  EvidenceSet() = default;
  explicit EvidenceSet(std::vector<EdgeEvidence> edges);

  const std::vector<EdgeEvidence> &edges() const { return edges_; }
  size_t size() const { return edges_.size(); }
  const EdgeEvidence *Find(PredicateIndex from, PredicateIndex to) const;

 private:
  std::vector<EdgeEvidence> edges_;
};

struct FilterOptions {
  TimeSource source = TimeSource::kTimexAndDocDate;
  Window window;
  int threads = 1;
  // If non-empty, predicates with active[p] == false are ignored.
  std::vector<bool> active;
};

EvidenceSet TemporalFilter(const Corpus &corpus, const FilterOptions &options);

// `p \t q \t arg1|arg2 \t filtered`, sorted.
void DumpEvidence(std::ostream &out, const Corpus &corpus, const EvidenceSet &evidence);

}  // namespace tempograph

#endif  // TEMPOGRAPH_TEMPORAL_FILTER_H_
