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

#include "tempograph/similarity.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "tempograph/errors.h"
#include "tempograph/parallel.h"

namespace tempograph {

namespace {

std::vector<MeasureSpec> BuildRegistry() {
  struct FamilyName {
    Family family;
    const char *name;
  };
  static constexpr FamilyName kFamilies[] = {
      {Family::kLin, "lin"},
      {Family::kWeedsPrecision, "weeds_pr"},
      {Family::kWeedsRecall, "weeds_rec"},
      {Family::kWeedsSimilarity, "weeds_sim"},
      {Family::kBInc, "binc"},
  };
  std::vector<MeasureSpec> r;
  r.push_back({"cosine", Family::kCosine, Weighting::kPmi, TemporalMode::kNone});
  for (const auto &f : kFamilies) {
    r.push_back({std::string(f.name) + "_count", f.family, Weighting::kCount,
                 TemporalMode::kNone});
  }
  for (const auto &f : kFamilies) {
    r.push_back({std::string(f.name) + "_pmi", f.family, Weighting::kPmi,
                 TemporalMode::kNone});
  }
  for (const auto &f : kFamilies) {
    r.push_back({"t_" + std::string(f.name) + "_count", f.family, Weighting::kCount,
                 TemporalMode::kFilteredCount});
  }
  for (const auto &f : kFamilies) {
    r.push_back({"t_ratio_" + std::string(f.name) + "_pmi", f.family, Weighting::kPmi,
                 TemporalMode::kRatioPmi});
  }
  for (const auto &f : kFamilies) {
    r.push_back({"t_binary_" + std::string(f.name) + "_pmi", f.family, Weighting::kPmi,
                 TemporalMode::kBinaryPmi});
  }
  r.push_back({"t_hybrid_ratio_binc", Family::kBInc, Weighting::kPmi,
               TemporalMode::kHybridRatio});
  r.push_back({"t_hybrid_binary_binc", Family::kBInc, Weighting::kPmi,
               TemporalMode::kHybridBinary});
  r.push_back({"weeds_prob_count", Family::kWeedsProbabilistic, Weighting::kCount,
               TemporalMode::kNone});
  r.push_back({"t_weeds_prob_count", Family::kWeedsProbabilistic, Weighting::kCount,
               TemporalMode::kFilteredCount});
  return r;
}

double SafeDiv(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// Temporal weight of one side of a shared feature.
double TemporalWeight(TemporalMode mode, const FeatureEntry &entry, int64_t filtered) {
  switch (mode) {
    case TemporalMode::kFilteredCount:
      return static_cast<double>(filtered);
    case TemporalMode::kRatioPmi:
      return entry.pmi * (static_cast<double>(filtered) / static_cast<double>(entry.count));
    case TemporalMode::kBinaryPmi:
      return filtered > 0 ? entry.pmi : 0.0;
    default:
      return 0.0;
  }
}

double PlainWeight(Weighting weighting, const FeatureEntry &entry) {
  return weighting == Weighting::kCount ? static_cast<double>(entry.count) : entry.pmi;
}

// Calls fn(p_entry, q_entry, filtered_pq, filtered_qp) for every shared
// feature, in pair order.
template <typename Fn>
void ForEachShared(const PairEvidence &ev, Fn &&fn) {
  auto a = ev.p.entries.begin(), a_end = ev.p.entries.end();
  auto b = ev.q.entries.begin(), b_end = ev.q.entries.end();
  size_t fi = 0, bi = 0;
  while (a != a_end && b != b_end) {
    if (a->pair < b->pair) {
      ++a;
    } else if (b->pair < a->pair) {
      ++b;
    } else {
      const PairIndex pair = a->pair;
      int64_t fwd = 0, bwd = 0;
      if (ev.forward) {
        const auto &fs = ev.forward->features;
        while (fi < fs.size() && fs[fi].pair < pair) ++fi;
        if (fi < fs.size() && fs[fi].pair == pair) fwd = fs[fi].filtered;
      }
      if (ev.backward) {
        const auto &bs = ev.backward->features;
        while (bi < bs.size() && bs[bi].pair < pair) ++bi;
        if (bi < bs.size() && bs[bi].pair == pair) bwd = bs[bi].filtered;
      }
      fn(*a, *b, fwd, bwd);
      ++a;
      ++b;
    }
  }
}

}  // namespace

std::string_view DenominatorName(Denominator d) {
  return d == Denominator::kUnfiltered ? "unfiltered" : "filtered";
}

Denominator ParseDenominator(std::string_view name) {
  if (name == "unfiltered") return Denominator::kUnfiltered;
  if (name == "filtered") return Denominator::kFiltered;
  throw UsageError("unknown temporal denominator '" + std::string(name) +
                   "' (expected unfiltered or filtered)");
}

const std::vector<MeasureSpec> &MeasureRegistry() {
  static const std::vector<MeasureSpec> registry = BuildRegistry();
  return registry;
}

std::vector<MeasureSpec> DefaultMeasures() {
  std::vector<MeasureSpec> out;
  for (const auto &m : MeasureRegistry()) {
    if (m.id != "t_weeds_prob_count") out.push_back(m);
  }
  return out;
}

const MeasureSpec &FindMeasure(std::string_view id) {
  for (const auto &m : MeasureRegistry()) {
    if (m.id == id) return m;
  }
  throw UsageError("unknown measure '" + std::string(id) + "'");
}

std::vector<MeasureSpec> ParseMeasureList(std::string_view list) {
  if (list == "all") return DefaultMeasures();
  std::vector<MeasureSpec> out;
  size_t pos = 0;
  while (pos <= list.size()) {
    size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view id = list.substr(pos, comma - pos);
    if (id.empty()) throw UsageError("empty measure id in list");
    const MeasureSpec &m = FindMeasure(id);
    bool dup = std::any_of(out.begin(), out.end(),
                           [&](const MeasureSpec &s) { return s.id == m.id; });
    if (dup) throw UsageError("measure '" + m.id + "' listed twice");
    out.push_back(m);
    pos = comma + 1;
  }
  return out;
}

const MeasureSpec *NonTemporalCounterpart(const MeasureSpec &spec) {
  switch (spec.mode) {
    case TemporalMode::kFilteredCount:
      for (const auto &m : MeasureRegistry()) {
        if (m.family == spec.family && m.weighting == Weighting::kCount &&
            m.mode == TemporalMode::kNone) {
          return &m;
        }
      }
      return nullptr;
    case TemporalMode::kRatioPmi:
    case TemporalMode::kBinaryPmi:
      for (const auto &m : MeasureRegistry()) {
        if (m.family == spec.family && m.weighting == Weighting::kPmi &&
            m.mode == TemporalMode::kNone) {
          return &m;
        }
      }
      return nullptr;
    default:
      return nullptr;
  }
}

double WeedsPrecision(const OverlapSums &s) { return SafeDiv(s.shared_p, s.total_p); }

double WeedsRecall(const OverlapSums &s) { return SafeDiv(s.shared_q, s.total_q); }

double LinSimilarity(const OverlapSums &s) {
  return SafeDiv(s.shared_p + s.shared_q, s.total_p + s.total_q);
}

double WeedsSimilarity(double precision, double recall) {
  return SafeDiv(2.0 * precision * recall, precision + recall);
}

double BInc(double lin, double weeds_precision) {
  return std::sqrt(lin * weeds_precision);
}

OverlapSums ComputeSums(const PairEvidence &ev, Weighting weighting, TemporalMode mode,
                        Denominator denominator) {
  OverlapSums s;
  if (mode == TemporalMode::kNone) {
    ForEachShared(ev, [&](const FeatureEntry &a, const FeatureEntry &b, int64_t, int64_t) {
      s.shared_p += PlainWeight(weighting, a);
      s.shared_q += PlainWeight(weighting, b);
    });
  } else {
    ForEachShared(ev, [&](const FeatureEntry &a, const FeatureEntry &b, int64_t fwd,
                          int64_t bwd) {
      s.shared_p += TemporalWeight(mode, a, fwd);
      s.shared_q += TemporalWeight(mode, b, bwd);
    });
  }
  if (mode != TemporalMode::kNone && denominator == Denominator::kFiltered) {
    // Filtered weights vanish outside the shared support.
    s.total_p = s.shared_p;
    s.total_q = s.shared_q;
    return s;
  }
  if (mode == TemporalMode::kFilteredCount) weighting = Weighting::kCount;
  for (const auto &e : ev.p.entries) s.total_p += PlainWeight(weighting, e);
  for (const auto &e : ev.q.entries) s.total_q += PlainWeight(weighting, e);
  return s;
}

double WeedsProbabilisticPrecision(const PairEvidence &ev, bool temporal,
                                   Denominator denominator) {
  double norm_p = static_cast<double>(ev.p.CountTotal());
  double norm_q = static_cast<double>(ev.q.CountTotal());
  if (temporal && denominator == Denominator::kFiltered) {
    norm_p = ev.forward ? static_cast<double>(ev.forward->total_filtered) : 0.0;
    norm_q = ev.backward ? static_cast<double>(ev.backward->total_filtered) : 0.0;
  }
  if (norm_p <= 0.0 || norm_q <= 0.0) return 0.0;
  double sum = 0.0;
  ForEachShared(ev, [&](const FeatureEntry &a, const FeatureEntry &b, int64_t fwd,
                        int64_t bwd) {
    double wp = static_cast<double>(temporal ? fwd : a.count) / norm_p;
    double wq = static_cast<double>(temporal ? bwd : b.count) / norm_q;
    sum += std::min(wp, wq);
  });
  return std::min(sum, 1.0);
}

namespace {

double FromSums(Family family, const OverlapSums &s) {
  switch (family) {
    case Family::kLin:
      return LinSimilarity(s);
    case Family::kWeedsPrecision:
      return WeedsPrecision(s);
    case Family::kWeedsRecall:
      return WeedsRecall(s);
    case Family::kWeedsSimilarity:
      return WeedsSimilarity(WeedsPrecision(s), WeedsRecall(s));
    case Family::kBInc:
      return BInc(LinSimilarity(s), WeedsPrecision(s));
    default:
      return 0.0;
  }
}

// Overlap sums for the five (weighting, mode) schemes, computed on demand.
class SumCache {
 public:
  SumCache(const PairEvidence &ev, Denominator d) : ev_(ev), denominator_(d) {}

  const OverlapSums &Get(Weighting w, TemporalMode mode) {
    size_t slot = Slot(w, mode);
    if (!ready_[slot]) {
      sums_[slot] = ComputeSums(ev_, w, mode, denominator_);
      ready_[slot] = true;
    }
    return sums_[slot];
  }

 private:
  static size_t Slot(Weighting w, TemporalMode mode) {
    switch (mode) {
      case TemporalMode::kNone:
        return w == Weighting::kCount ? 0 : 1;
      case TemporalMode::kFilteredCount:
        return 2;
      case TemporalMode::kRatioPmi:
        return 3;
      default:
        return 4;
    }
  }

  const PairEvidence &ev_;
  Denominator denominator_;
  std::array<OverlapSums, 5> sums_{};
  std::array<bool, 5> ready_{};
};

double ScoreCached(SumCache &cache, const PairEvidence &ev, const MeasureSpec &spec,
                   Denominator denominator) {
  switch (spec.family) {
    case Family::kCosine:
      return Cosine(ev.p, ev.q);
    case Family::kWeedsProbabilistic:
      return WeedsProbabilisticPrecision(ev, spec.mode != TemporalMode::kNone, denominator);
    default:
      break;
  }
  if (spec.mode == TemporalMode::kHybridRatio || spec.mode == TemporalMode::kHybridBinary) {
    const auto &count_sums = cache.Get(Weighting::kCount, TemporalMode::kFilteredCount);
    TemporalMode pmi_mode = spec.mode == TemporalMode::kHybridRatio
                                ? TemporalMode::kRatioPmi
                                : TemporalMode::kBinaryPmi;
    const auto &pmi_sums = cache.Get(Weighting::kPmi, pmi_mode);
    return BInc(LinSimilarity(pmi_sums), WeedsPrecision(count_sums));
  }
  return FromSums(spec.family, cache.Get(spec.weighting, spec.mode));
}

}  // namespace

double Score(const PairEvidence &ev, const MeasureSpec &spec, Denominator denominator) {
  SumCache cache(ev, denominator);
  return ScoreCached(cache, ev, spec, denominator);
}

const ScoreMatrix::Row *ScoreMatrix::Find(PredicateIndex from, PredicateIndex to) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), std::pair(from, to),
                             [](const Row &r, const std::pair<PredicateIndex, PredicateIndex> &k) {
                               return r.from != k.first ? r.from < k.first : r.to < k.second;
                             });
  if (it == rows.end() || it->from != from || it->to != to) return nullptr;
  return &*it;
}

ScoreMatrix ScoreAll(const FeatureSpace &space, const EvidenceSet &evidence,
                     std::span<const MeasureSpec> measures, Denominator denominator,
                     int threads) {
  ScoreMatrix matrix;
  matrix.measures.assign(measures.begin(), measures.end());
  const auto &edges = evidence.edges();
  matrix.rows.resize(edges.size());
  ParallelChunks(edges.size(), threads, [&](size_t, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const EdgeEvidence &e = edges[i];
      PairEvidence ev{space.vectors[e.from], space.vectors[e.to], &e,
                      evidence.Find(e.to, e.from)};
      SumCache cache(ev, denominator);
      auto &row = matrix.rows[i];
      row.from = e.from;
      row.to = e.to;
      row.values.reserve(measures.size());
      for (const auto &m : measures) {
        row.values.push_back(ScoreCached(cache, ev, m, denominator));
      }
    }
  });
  return matrix;
}

}  // namespace tempograph
