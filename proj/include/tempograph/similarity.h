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

// Distributional similarity measures between predicate feature vectors,
// their temporally filtered variants, and the measure registry.
//
// For the direction p -> q and a shared feature ep, the weights are
//
//   non-temporal   w_p(ep) = c(p,ep)            (count)
//                  w_p(ep) = pmi(p,ep)          (PMI)
//   filtered count w_p(ep) = filtered(p,q,ep)
//   ratio PMI      w_p(ep) = pmi(p,ep) * filtered(p,q,ep) / c(p,ep)
//   binary PMI     w_p(ep) = filtered(p,q,ep) > 0 ? pmi(p,ep) : 0
//
// and symmetrically for q with filtered(q,p,ep). Numerators sum these over
// shared features; denominators sum the unfiltered weights of the same
// scheme over each predicate's whole support (or, with
// Denominator::kFiltered, the filtered weights).

#ifndef TEMPOGRAPH_SIMILARITY_H_
#define TEMPOGRAPH_SIMILARITY_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tempograph/features.h"
#include "tempograph/temporal_filter.h"

namespace tempograph {

enum class Family {
  kLin,
  kWeedsPrecision,
  kWeedsRecall,
  kWeedsSimilarity,
  kBInc,
  kCosine,
  kWeedsProbabilistic,
};

enum class Weighting { kCount, kPmi };

enum class TemporalMode {
  kNone,
  kFilteredCount,
  kRatioPmi,
  kBinaryPmi,
  // BInc from filtered-count Weeds precision and ratio/binary PMI Lin.
  kHybridRatio,
  kHybridBinary,
};

enum class Denominator { kUnfiltered, kFiltered };

std::string_view DenominatorName(Denominator d);
Denominator ParseDenominator(std::string_view name);

struct MeasureSpec {
  std::string id;
  Family family;
  Weighting weighting;
  TemporalMode mode;
};

// Every known measure (30 ids), in canonical order.
const std::vector<MeasureSpec> &MeasureRegistry();
// The default 29-measure set: the registry without t_weeds_prob_count.
std::vector<MeasureSpec> DefaultMeasures();
// Throws UsageError for an unknown id.
const MeasureSpec &FindMeasure(std::string_view id);
// "all" or a comma-separated list of ids. Throws UsageError.
std::vector<MeasureSpec> ParseMeasureList(std::string_view list);
// The non-temporal measure a temporal one is compared against, or nullptr
// (hybrids and non-temporal measures have none in the registry).
const MeasureSpec *NonTemporalCounterpart(const MeasureSpec &spec);

// Weighted feature overlap of p and q in the direction p -> q.
struct OverlapSums {
  double shared_p = 0.0;  // sum of w_p over shared features
  double shared_q = 0.0;  // sum of w_q over shared features
  double total_p = 0.0;   // denominator mass of p
  double total_q = 0.0;   // denominator mass of q
};

double WeedsPrecision(const OverlapSums &s);
// Equal to WeedsPrecision of the reversed direction.
double WeedsRecall(const OverlapSums &s);
double LinSimilarity(const OverlapSums &s);
// Harmonic mean, 0 when both are 0.
double WeedsSimilarity(double precision, double recall);
// Geometric mean of Lin and Weeds precision.
double BInc(double lin, double weeds_precision);

// Everything needed to score the ordered pair p -> q. The edge pointers may
// be null for non-temporal scoring; a null edge counts as all-zero filtered
// counts.
struct PairEvidence {
  const FeatureVector &p;
  const FeatureVector &q;
  const EdgeEvidence *forward = nullptr;   // p -> q
  const EdgeEvidence *backward = nullptr;  // q -> p
};

// `mode` must be kNone, kFilteredCount, kRatioPmi or kBinaryPmi. The
// filtered-count mode ignores `weighting`.
OverlapSums ComputeSums(const PairEvidence &ev, Weighting weighting, TemporalMode mode,
                        Denominator denominator = Denominator::kUnfiltered);

// Sum over shared features of min(P_p(ep), P_q(ep)) with P = count / c(p);
// the temporal form uses filtered counts in place of counts.
double WeedsProbabilisticPrecision(const PairEvidence &ev, bool temporal,
                                   Denominator denominator = Denominator::kUnfiltered);

double Score(const PairEvidence &ev, const MeasureSpec &spec,
             Denominator denominator = Denominator::kUnfiltered);

// Scores for every ordered predicate pair that shares a feature. Pairs
// absent from the matrix have an implicit score of 0 under every measure.
struct ScoreMatrix {
  struct Row {
    PredicateIndex from;
    PredicateIndex to;
    std::vector<double> values;  // parallel to measures
  };
  std::vector<MeasureSpec> measures;
  std::vector<Row> rows;  // sorted by (from, to)

  const Row *Find(PredicateIndex from, PredicateIndex to) const;
};

ScoreMatrix ScoreAll(const FeatureSpace &space, const EvidenceSet &evidence,
                     std::span<const MeasureSpec> measures,
                     Denominator denominator = Denominator::kUnfiltered,
                     int threads = 1);

}  // namespace tempograph

#endif  // TEMPOGRAPH_SIMILARITY_H_
