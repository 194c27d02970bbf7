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

#include "tempograph/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "tempograph/errors.h"
#include "tempograph/features.h"
#include "tempograph/parallel.h"
#include "tempograph/temporal_filter.h"

namespace tempograph {

namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  return out;
}

bool IsBlank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

void Chomp(std::string &line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::string_view ClassName(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::kWin:
      return "win";
    case OutcomeClass::kLose:
      return "lose";
    case OutcomeClass::kTie:
      return "tie";
    case OutcomeClass::kPlay:
      return "play";
  }
  return "?";
}

OutcomeClass ParseClass(std::string_view name) {
  for (OutcomeClass c : kAllClasses) {
    if (ClassName(c) == name) return c;
  }
  throw DataError("unknown class '" + std::string(name) + "' (expected win, lose, tie or play)");
}

void ValidateClusters(const ParaphraseClusters &clusters) {
  std::set<std::string> seen;
  for (OutcomeClass c : kAllClasses) {
    if (clusters.of(c).empty()) {
      throw DataError("paraphrase class '" + std::string(ClassName(c)) + "' is empty");
    }
    for (const auto &m : clusters.of(c)) {
      if (m.predicate.empty()) throw DataError("empty predicate in clusters");
      if (!seen.insert(m.predicate).second) {
        throw DataError("predicate '" + m.predicate + "' appears in more than one cluster entry");
      }
    }
  }
}

ParaphraseClusters LoadClusters(std::istream &in) {
  ParaphraseClusters clusters;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Chomp(line);
    if (IsBlank(line) || line[0] == '#') continue;
    auto parts = SplitTabs(line);
    auto fail = [&](const std::string &why) {
      throw DataError("clusters line " + std::to_string(line_no) + ": " + why);
    };
    if (parts.size() != 3) fail("expected 3 tab-separated fields");
    OutcomeClass c;
    try {
      c = ParseClass(parts[0]);
    } catch (const DataError &e) {
      fail(e.what());
    }
    ClusterMember m{parts[1], Specificity::kNonSpecific};
    if (parts[2] == "specific") {
      m.specificity = Specificity::kSpecific;
    } else if (parts[2] != "non-specific") {
      fail("specificity must be 'specific' or 'non-specific'");
    }
    clusters.of(c).push_back(std::move(m));
  }
  ValidateClusters(clusters);
  return clusters;
}

ParaphraseClusters LoadClustersFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open clusters file '" + path + "'");
  return LoadClusters(in);
}

void WriteClusters(std::ostream &out, const ParaphraseClusters &clusters) {
  for (OutcomeClass c : kAllClasses) {
    for (const auto &m : clusters.of(c)) {
      out << ClassName(c) << '\t' << m.predicate << '\t'
          << (m.specificity == Specificity::kSpecific ? "specific" : "non-specific") << '\n';
    }
  }
}

std::string_view CategoryName(PairCategory c) {
  switch (c) {
    case PairCategory::kEntailment1:
      return "entailment1";
    case PairCategory::kOutcome0:
      return "outcome0";
    case PairCategory::kDirectional0:
      return "directional0";
    case PairCategory::kParaphrase1:
      return "paraphrase1";
  }
  return "?";
}

PairCategory ParseCategory(std::string_view name) {
  for (auto c : {PairCategory::kEntailment1, PairCategory::kOutcome0,
                 PairCategory::kDirectional0, PairCategory::kParaphrase1}) {
    if (CategoryName(c) == name) return c;
  }
  throw DataError("unknown category '" + std::string(name) + "'");
}

bool CategoryEntails(PairCategory c) {
  return c == PairCategory::kEntailment1 || c == PairCategory::kParaphrase1;
}

PairCategory CategoryFor(OutcomeClass from, OutcomeClass to) {
  if (from == to) return PairCategory::kParaphrase1;
  if (to == OutcomeClass::kPlay) return PairCategory::kEntailment1;
  if (from == OutcomeClass::kPlay) return PairCategory::kDirectional0;
  return PairCategory::kOutcome0;
}

std::vector<EntailmentPair> GeneratePairs(const ParaphraseClusters &clusters) {
  ValidateClusters(clusters);
  std::vector<EntailmentPair> out;
  for (OutcomeClass from : kAllClasses) {
    for (const auto &premise : clusters.of(from)) {
      for (OutcomeClass to : kAllClasses) {
        PairCategory cat = CategoryFor(from, to);
        for (const auto &hyp : clusters.of(to)) {
          if (premise.predicate == hyp.predicate) continue;
          if (cat == PairCategory::kParaphrase1 &&
              (premise.specificity == Specificity::kSpecific ||
               hyp.specificity == Specificity::kSpecific)) {
            continue;
          }
          out.push_back({premise.predicate, hyp.predicate, CategoryEntails(cat), cat});
        }
      }
    }
  }
  return out;
}

std::vector<EntailmentPair> LoadPairs(std::istream &in) {
  std::vector<EntailmentPair> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Chomp(line);
    if (IsBlank(line) || line[0] == '#') continue;
    auto fail = [&](const std::string &why) {
      throw DataError("pairs row " + std::to_string(line_no) + ": " + why);
    };
    auto parts = SplitTabs(line);
    if (parts.size() != 4) fail("expected 4 tab-separated fields");
    EntailmentPair pair;
    pair.premise = parts[0];
    pair.hypothesis = parts[1];
    if (pair.premise.empty() || pair.hypothesis.empty()) fail("empty predicate");
    if (pair.premise == pair.hypothesis) fail("premise equals hypothesis");
    if (parts[2] == "1" || parts[2] == "entails") {
      pair.entails = true;
    } else if (parts[2] == "0" || parts[2] == "not-entails") {
      pair.entails = false;
    } else {
      fail("label must be 1, 0, entails or not-entails");
    }
    try {
      pair.category = ParseCategory(parts[3]);
    } catch (const DataError &e) {
      fail(e.what());
    }
    if (pair.entails != CategoryEntails(pair.category)) {
      fail("label " + parts[2] + " contradicts category " + parts[3]);
    }
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<EntailmentPair> LoadPairsFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open pairs file '" + path + "'");
  return LoadPairs(in);
}

void WritePairs(std::ostream &out, std::span<const EntailmentPair> pairs) {
  for (const auto &p : pairs) {
    out << p.premise << '\t' << p.hypothesis << '\t' << (p.entails ? 1 : 0) << '\t'
        << CategoryName(p.category) << '\n';
  }
}

std::string_view SubsetName(EvalSubset s) {
  switch (s) {
    case EvalSubset::kBase:
      return "base";
    case EvalSubset::kDirectional:
      return "directional";
    case EvalSubset::kAll:
      return "all";
  }
  return "?";
}

EvalSubset ParseSubset(std::string_view name) {
  for (EvalSubset s : kAllSubsets) {
    if (SubsetName(s) == name) return s;
  }
  throw UsageError("unknown subset '" + std::string(name) +
                   "' (expected base, directional or all)");
}

bool InSubset(PairCategory c, EvalSubset s) {
  switch (s) {
    case EvalSubset::kBase:
      return c == PairCategory::kEntailment1 || c == PairCategory::kOutcome0;
    case EvalSubset::kDirectional:
      return c == PairCategory::kEntailment1 || c == PairCategory::kDirectional0;
    case EvalSubset::kAll:
      return true;
  }
  return false;
}

std::vector<EntailmentPair> SelectSubset(std::span<const EntailmentPair> pairs, EvalSubset s) {
  std::vector<EntailmentPair> out;
  for (const auto &p : pairs) {
    if (InSubset(p.category, s)) out.push_back(p);
  }
  return out;
}

double CappedAuc(std::span<const PrPoint> points, double recall_cap) {
  if (points.empty()) return 0.0;
  double area = 0.0;
  PrPoint prev{0.0, points.front().precision};
  for (const auto &pt : points) {
    if (prev.recall >= recall_cap) break;
    if (pt.recall <= recall_cap) {
      area += (pt.recall - prev.recall) * (pt.precision + prev.precision) / 2.0;
    } else {
      double t = (recall_cap - prev.recall) / (pt.recall - prev.recall);
      double at_cap = prev.precision + (pt.precision - prev.precision) * t;
      area += (recall_cap - prev.recall) * (prev.precision + at_cap) / 2.0;
      break;
    }
    prev = pt;
  }
  return area;
}

PrCurve ComputePrCurve(std::span<const ScoredPair> scored, double recall_cap) {
  if (!(recall_cap > 0.0 && recall_cap <= 1.0)) {
    throw UsageError("recall cap must be in (0, 1]");
  }
  size_t positives = 0;
  for (const auto &s : scored) positives += s.positive ? 1 : 0;
  if (positives == 0) throw DataError("no positive pairs to evaluate");

  std::vector<ScoredPair> sorted(scored.begin(), scored.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredPair &a, const ScoredPair &b) { return a.score > b.score; });
  PrCurve curve;
  size_t tp = 0, retrieved = 0;
  for (size_t i = 0; i < sorted.size() && sorted[i].score > 0.0;) {
    size_t j = i;
    while (j < sorted.size() && sorted[j].score == sorted[i].score) {
      tp += sorted[j].positive ? 1 : 0;
      ++retrieved;
      ++j;
    }
    curve.points.push_back({static_cast<double>(tp) / static_cast<double>(positives),
                            static_cast<double>(tp) / static_cast<double>(retrieved)});
    i = j;
  }
  curve.auc_capped = CappedAuc(curve.points, recall_cap);
  return curve;
}

std::vector<ResultRow> EvaluateGraph(const EntailmentGraph &graph,
                                     std::span<const EntailmentPair> pairs,
                                     std::span<const EvalSubset> subsets,
                                     double recall_cap) {
  TimeSource source = ParseTimeSource(graph.header.time_source);
  std::vector<std::vector<EntailmentPair>> selected;
  for (EvalSubset s : subsets) selected.push_back(SelectSubset(pairs, s));

  std::vector<ResultRow> rows;
  for (size_t m = 0; m < graph.header.measures.size(); ++m) {
    for (size_t k = 0; k < subsets.size(); ++k) {
      std::vector<ScoredPair> scored;
      scored.reserve(selected[k].size());
      for (const auto &p : selected[k]) {
        scored.push_back({graph.ScoreOf(p.premise, p.hypothesis, m), p.entails});
      }
      PrCurve curve = ComputePrCurve(scored, recall_cap);
      rows.push_back({source, graph.header.window, graph.header.measures[m], subsets[k],
                      curve.auc_capped, recall_cap});
    }
  }
  return rows;
}

std::vector<ResultRow> RunExperiment(const Corpus &corpus,
                                     std::span<const EntailmentPair> pairs,
                                     const ExperimentGrid &grid) {
  if (corpus.empty()) throw DataError("no evidence: corpus is empty");
  for (int64_t w : grid.windows) {
    if (w < 0) throw UsageError("window must be >= 0");
  }
  FeatureSpace space = BuildVectors(corpus, {.clamp_pmi = true, .threads = grid.threads});
  auto active = ActivePredicates(corpus, grid.min_count);

  struct Config {
    TimeSource source;
    int64_t window;
  };
  std::vector<Config> configs;
  for (TimeSource s : grid.sources) {
    for (int64_t w : grid.windows) configs.push_back({s, w});
  }

  std::vector<std::vector<ResultRow>> results(configs.size());
  ParallelChunks(configs.size(), grid.threads, [&](size_t, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      GraphOptions options;
      options.source = configs[i].source;
      options.window = Window{configs[i].window, grid.window_mode};
      options.measures = grid.measures;
      options.denominator = grid.denominator;
      options.min_count = grid.min_count;
      FilterOptions filter{options.source, options.window, 1, active};
      EvidenceSet evidence = TemporalFilter(corpus, filter);
      ScoreMatrix scores = ScoreAll(space, evidence, grid.measures, grid.denominator, 1);
      EntailmentGraph graph = AssembleGraph(corpus, scores, options);
      results[i] = EvaluateGraph(graph, pairs, grid.subsets, grid.recall_cap);
    }
  });

  std::vector<ResultRow> rows;
  for (auto &r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

void WriteResultsCsv(std::ostream &out, std::span<const ResultRow> rows) {
  out << "source,window,measure,subset,auc,recall_cap\n";
  char buf[64];
  for (const auto &r : rows) {
    out << TimeSourceName(r.source) << ',' << r.window << ',' << r.measure << ','
        << SubsetName(r.subset) << ',';
    std::snprintf(buf, sizeof(buf), "%.6f,%g", r.auc, r.recall_cap);
    out << buf << '\n';
  }
}

}  // namespace tempograph
