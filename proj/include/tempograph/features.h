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

// Sparse predicate feature vectors: raw event counts and PMI weights over
// entity-pair features.

#ifndef TEMPOGRAPH_FEATURES_H_
#define TEMPOGRAPH_FEATURES_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tempograph/relation.h"

namespace tempograph {

struct FeatureEntry {
  PairIndex pair;
  int64_t count;  // c(p, ep) >= 1
  double pmi;     // max(0, ln(c(p,ep) T / (c(p) c(ep)))) unless clamping is off
};

struct FeatureVector {
  PredicateIndex predicate = 0;
  std::vector<FeatureEntry> entries;  // sorted by pair, no zero counts

  const FeatureEntry *Find(PairIndex pair) const;
  int64_t CountTotal() const;
  double PmiTotal() const;
};

// Marginals of the count matrix. total == sum of predicate_totals == sum of
// pair_totals.
struct CountTables {
  std::vector<int64_t> predicate_totals;
  std::vector<int64_t> pair_totals;
  int64_t total = 0;
};

struct VectorOptions {
  // Negative PMI is clamped to zero. Turning this off is for debugging only;
  // the similarity measures assume non-negative weights.
  bool clamp_pmi = true;
  int threads = 1;
};

struct FeatureSpace {
  std::vector<FeatureVector> vectors;  // indexed by PredicateIndex
  CountTables tables;
};

// Throws DataError("no evidence") for an empty corpus. Output does not depend
// on the thread count.
FeatureSpace BuildVectors(const Corpus &corpus, const VectorOptions &options = {});

// Cosine over PMI weights; 0 if either vector has zero norm.
double Cosine(const FeatureVector &p, const FeatureVector &q);

// One line per entry: predicate, "arg1|arg2", raw count, pmi (tab separated,
// lexicographically sorted).
void DumpVectors(std::ostream &out, const Corpus &corpus, const FeatureSpace &space);

}  // namespace tempograph

#endif  // TEMPOGRAPH_FEATURES_H_
