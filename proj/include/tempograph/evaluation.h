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

// Entailment-pair datasets built from paraphrase clusters, precision-recall
// curves with recall-capped AUC, and the experiment grid runner.

#ifndef TEMPOGRAPH_EVALUATION_H_
#define TEMPOGRAPH_EVALUATION_H_

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tempograph/graph.h"
#include "tempograph/relation.h"
#include "tempograph/similarity.h"
#include "tempograph/time_interval.h"

namespace tempograph {

enum class OutcomeClass { kWin = 0, kLose = 1, kTie = 2, kPlay = 3 };

inline constexpr OutcomeClass kAllClasses[] = {OutcomeClass::kWin, OutcomeClass::kLose,
                                               OutcomeClass::kTie, OutcomeClass::kPlay};

std::string_view ClassName(OutcomeClass c);
OutcomeClass ParseClass(std::string_view name);  // throws DataError

enum class Specificity { kNonSpecific, kSpecific };

struct ClusterMember {
  std::string predicate;
  Specificity specificity = Specificity::kNonSpecific;
};

struct ParaphraseClusters {
  std::array<std::vector<ClusterMember>, 4> members;  // indexed by OutcomeClass

  std::vector<ClusterMember> &of(OutcomeClass c) { return members[static_cast<int>(c)]; }
  const std::vector<ClusterMember> &of(OutcomeClass c) const {
    return members[static_cast<int>(c)];
  }
};

// Throws DataError when a class is empty or a predicate appears twice.
void ValidateClusters(const ParaphraseClusters &clusters);

// `class \t predicate \t specificity` with specificity "specific" or
// "non-specific".
ParaphraseClusters LoadClusters(std::istream &in);
ParaphraseClusters LoadClustersFile(const std::string &path);
void WriteClusters(std::ostream &out, const ParaphraseClusters &clusters);

enum class PairCategory { kEntailment1, kOutcome0, kDirectional0, kParaphrase1 };

std::string_view CategoryName(PairCategory c);
PairCategory ParseCategory(std::string_view name);  // throws DataError
// Gold label implied by a category.
bool CategoryEntails(PairCategory c);

struct EntailmentPair {
  std::string premise;
  std::string hypothesis;
  bool entails = false;
  PairCategory category = PairCategory::kEntailment1;

  friend bool operator==(const EntailmentPair &, const EntailmentPair &) = default;
};

// Premise in class `from`, hypothesis in class `to`.
PairCategory CategoryFor(OutcomeClass from, OutcomeClass to);

// Labels every ordered pair of distinct predicates by the class pattern:
// outcome -> play entails, outcome -> other outcome and play -> outcome do
// not, and within-class pairs (paraphrases) are emitted only when both
// predicates are non-specific.
std::vector<EntailmentPair> GeneratePairs(const ParaphraseClusters &clusters);

// `premise \t hypothesis \t label \t category`; label is 1/0 (or
// entails/not-entails on input). Rows whose label contradicts the category
// are rejected with their row number.
std::vector<EntailmentPair> LoadPairs(std::istream &in);
std::vector<EntailmentPair> LoadPairsFile(const std::string &path);
void WritePairs(std::ostream &out, std::span<const EntailmentPair> pairs);

enum class EvalSubset { kBase, kDirectional, kAll };

inline constexpr EvalSubset kAllSubsets[] = {EvalSubset::kBase, EvalSubset::kDirectional,
                                             EvalSubset::kAll};

std::string_view SubsetName(EvalSubset s);
EvalSubset ParseSubset(std::string_view name);  // throws UsageError
bool InSubset(PairCategory c, EvalSubset s);
std::vector<EntailmentPair> SelectSubset(std::span<const EntailmentPair> pairs, EvalSubset s);

struct ScoredPair {
  double score;
  bool positive;
};

struct PrPoint {
  double recall;
  double precision;
};

struct PrCurve {
  std::vector<PrPoint> points;  // one per distinct positive score, descending
  double auc_capped = 0.0;
};

// Sweeps thresholds over the distinct scores > 0 in descending order,
// admitting tied pairs together. Pairs scored 0 are never retrieved but
// still count as positives in the recall denominator. The area runs from
// recall 0 at the first point's precision, trapezoidally through the
// points, and stops at `recall_cap` (interpolating the last segment).
// Throws DataError if no pair is positive, UsageError for a cap outside
// (0, 1].
PrCurve ComputePrCurve(std::span<const ScoredPair> scored, double recall_cap);

// Area under `points` as described above.
double CappedAuc(std::span<const PrPoint> points, double recall_cap);

// Experiment grid: every (source, window) graph scored on every measure and
// dataset subset.
struct ExperimentGrid {
  std::vector<TimeSource> sources{TimeSource::kTimexAndDocDate};
  std::vector<int64_t> windows{4};
  std::vector<MeasureSpec> measures = DefaultMeasures();
  std::vector<EvalSubset> subsets{EvalSubset::kBase};
  WindowMode window_mode = WindowMode::kBoth;
  Denominator denominator = Denominator::kUnfiltered;
  double recall_cap = 0.75;
  int64_t min_count = 0;
  int threads = 1;
};

struct ResultRow {
  TimeSource source;
  int64_t window;
  std::string measure;
  EvalSubset subset;
  double auc;
  double recall_cap;
};

// AUC of every graph measure on every listed subset, in measure-major order.
// Source and window are taken from the graph header.
std::vector<ResultRow> EvaluateGraph(const EntailmentGraph &graph,
                                     std::span<const EntailmentPair> pairs,
                                     std::span<const EvalSubset> subsets,
                                     double recall_cap);

// Rows come out in grid order (source, window, measure, subset as listed)
// regardless of the thread count.
std::vector<ResultRow> RunExperiment(const Corpus &corpus,
                                     std::span<const EntailmentPair> pairs,
                                     const ExperimentGrid &grid);

// Header `source,window,measure,subset,auc,recall_cap`.
void WriteResultsCsv(std::ostream &out, std::span<const ResultRow> rows);

}  // namespace tempograph

#endif  // TEMPOGRAPH_EVALUATION_H_
