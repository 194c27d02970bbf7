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

// Slow, direct reimplementations used as test oracles. Nothing here shares
// code with the library beyond the plain data types: intervals are
// materialized as day sets, counts are recounted from the raw instance
// list with string keys, and measures are evaluated from their textbook
// definitions on explicit weight maps.

#ifndef TEMPOGRAPH_TESTS_REFERENCE_BRUTE_FORCE_H_
#define TEMPOGRAPH_TESTS_REFERENCE_BRUTE_FORCE_H_

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tempograph/relation.h"

namespace tempograph::reference {

enum class Source { kTimex, kDocDate, kBoth };

inline std::set<Day> DaySet(TimeInterval iv, int64_t ext) {
  std::set<Day> days;
  for (Day d = iv.start - ext; d <= iv.end + ext; ++d) days.insert(d);
  return days;
}

// Intersects the explicit day sets of the two windowed intervals.
inline bool DaySetOverlap(TimeInterval a, TimeInterval b, int64_t ext_a, int64_t ext_b) {
  auto da = DaySet(a, ext_a);
  auto db = DaySet(b, ext_b);
  for (Day d : da) {
    if (db.count(d)) return true;
  }
  return false;
}

inline std::vector<TimeInterval> Intervals(const RelationInstance &inst, Source src) {
  std::vector<TimeInterval> doc;
  if (inst.doc_date) doc.push_back({*inst.doc_date, *inst.doc_date});
  if (src == Source::kTimex) return inst.timex_intervals;
  if (src == Source::kDocDate) return doc;
  return inst.timex_intervals.empty() ? doc : inst.timex_intervals;
}

using Key = std::tuple<std::string, std::string, std::string>;  // p, q, "a1|a2"

inline std::string PairKey(const EntityPairId &ep) { return ep.arg1 + "|" + ep.arg2; }

// filtered(p, q, ep) for every p != q sharing ep, by enumerating every
// (p-instance, q-instance) combination. Predicates are keyed by name.
inline std::map<Key, int64_t> FilteredCounts(const std::vector<RelationInstance> &instances,
                                             Source src, int64_t ext_a, int64_t ext_b) {
  std::map<std::string, std::map<std::string, std::vector<const RelationInstance *>>> by_ep;
  for (const auto &inst : instances) {
    by_ep[PairKey(inst.entity_pair)][inst.predicate.name].push_back(&inst);
  }
  std::map<Key, int64_t> out;
  for (const auto &[ep, preds] : by_ep) {
    for (const auto &[p, p_insts] : preds) {
      for (const auto &[q, q_insts] : preds) {
        if (p == q) continue;
        int64_t n = 0;
        for (const auto *pi : p_insts) {
          bool hit = false;
          for (const auto *qi : q_insts) {
            for (const auto &a : Intervals(*pi, src)) {
              for (const auto &b : Intervals(*qi, src)) {
                if (DaySetOverlap(a, b, ext_a, ext_b)) hit = true;
              }
            }
          }
          n += hit ? 1 : 0;
        }
        out[{p, q, ep}] = n;
      }
    }
  }
  return out;
}

struct Counts {
  std::map<std::string, std::map<std::string, int64_t>> cell;  // p -> ep -> c
  std::map<std::string, int64_t> pred;
  std::map<std::string, int64_t> ep;
  int64_t total = 0;
};

inline Counts Recount(const std::vector<RelationInstance> &instances) {
  Counts c;
  for (const auto &inst : instances) {
    std::string ep = PairKey(inst.entity_pair);
    ++c.cell[inst.predicate.name][ep];
    ++c.pred[inst.predicate.name];
    ++c.ep[ep];
    ++c.total;
  }
  return c;
}

inline double Pmi(const Counts &c, const std::string &p, const std::string &ep, bool clamp = true) {
  double v = std::log(static_cast<double>(c.cell.at(p).at(ep)) * c.total /
                      (static_cast<double>(c.pred.at(p)) * c.ep.at(ep)));
  return clamp ? std::max(0.0, v) : v;
}

using Weights = std::map<std::string, double>;  // ep -> weight

inline double Sum(const Weights &w) {
  double s = 0;
  for (const auto &[k, v] : w) s += v;
  return s;
}

// Numerator weights restricted to shared features; denominators are the
// full unfiltered masses.
inline double WeedsPrecision(const Weights &num_p, const Weights &den_p) {
  double d = Sum(den_p);
  return d > 0 ? Sum(num_p) / d : 0.0;
}

inline double Lin(const Weights &num_p, const Weights &num_q, const Weights &den_p,
                  const Weights &den_q) {
  double d = Sum(den_p) + Sum(den_q);
  return d > 0 ? (Sum(num_p) + Sum(num_q)) / d : 0.0;
}

inline double Harmonic(double a, double b) { return a + b > 0 ? 2 * a * b / (a + b) : 0.0; }

inline double Cosine(const Weights &a, const Weights &b) {
  double dot = 0, na = 0, nb = 0;
  for (const auto &[k, v] : a) {
    na += v * v;
    auto it = b.find(k);
    if (it != b.end()) dot += v * it->second;
  }
  for (const auto &[k, v] : b) nb += v * v;
  if (na == 0 || nb == 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// Any registry measure for p -> q, evaluated from definitions. `filtered`
// comes from FilteredCounts on the same instances. With `filtered_den`,
// temporal measures normalize by the filtered mass instead of the raw one.
inline double Measure(const std::string &id, const Counts &c,
                      const std::map<Key, int64_t> &filtered, const std::string &p,
                      const std::string &q, bool filtered_den = false) {
  const auto &cp = c.cell.at(p);
  const auto &cq = c.cell.at(q);
  std::vector<std::string> shared;
  for (const auto &[ep, n] : cp) {
    if (cq.count(ep)) shared.push_back(ep);
  }
  auto f = [&](const std::string &a, const std::string &b, const std::string &ep) -> double {
    auto it = filtered.find({a, b, ep});
    return it == filtered.end() ? 0.0 : static_cast<double>(it->second);
  };

  // kind: "count", "pmi", "fc", "ratio", "binary"
  auto numerator = [&](const std::string &kind, const std::string &a, const std::string &b) {
    Weights w;
    for (const auto &ep : shared) {
      double cnt = static_cast<double>(c.cell.at(a).at(ep));
      double pmi = Pmi(c, a, ep);
      double fl = f(a, b, ep);
      if (kind == "count") w[ep] = cnt;
      if (kind == "pmi") w[ep] = pmi;
      if (kind == "fc") w[ep] = fl;
      if (kind == "ratio") w[ep] = pmi * fl / cnt;
      if (kind == "binary") w[ep] = fl > 0 ? pmi : 0.0;
    }
    return w;
  };
  auto denominator = [&](const std::string &kind, const std::string &a) {
    bool temporal_kind = kind == "fc" || kind == "ratio" || kind == "binary";
    if (filtered_den && temporal_kind) return numerator(kind, a, a == p ? q : p);
    Weights w;
    for (const auto &[ep, n] : c.cell.at(a)) {
      bool counts = kind == "count" || kind == "fc";
      w[ep] = counts ? static_cast<double>(n) : Pmi(c, a, ep);
    }
    return w;
  };
  auto wp = [&](const std::string &kind, const std::string &a, const std::string &b) {
    return WeedsPrecision(numerator(kind, a, b), denominator(kind, a));
  };
  auto lin = [&](const std::string &kind) {
    return Lin(numerator(kind, p, q), numerator(kind, q, p), denominator(kind, p),
               denominator(kind, q));
  };

  if (id == "cosine") {
    Weights a, b;
    for (const auto &[ep, n] : cp) a[ep] = Pmi(c, p, ep);
    for (const auto &[ep, n] : cq) b[ep] = Pmi(c, q, ep);
    return Cosine(a, b);
  }
  if (id == "weeds_prob_count" || id == "t_weeds_prob_count") {
    bool temporal = id[0] == 't';
    double norm_p = static_cast<double>(c.pred.at(p));
    double norm_q = static_cast<double>(c.pred.at(q));
    if (temporal && filtered_den) {
      norm_p = norm_q = 0;
      for (const auto &ep : shared) {
        norm_p += f(p, q, ep);
        norm_q += f(q, p, ep);
      }
      if (norm_p == 0 || norm_q == 0) return 0.0;
    }
    double s = 0;
    for (const auto &ep : shared) {
      double a = (temporal ? f(p, q, ep) : cp.at(ep)) / norm_p;
      double b = (temporal ? f(q, p, ep) : cq.at(ep)) / norm_q;
      s += std::min(a, b);
    }
    return s;
  }
  if (id == "t_hybrid_ratio_binc") return std::sqrt(wp("fc", p, q) * lin("ratio"));
  if (id == "t_hybrid_binary_binc") return std::sqrt(wp("fc", p, q) * lin("binary"));

  std::string rest = id;
  std::string kind;
  auto strip = [&](const std::string &prefix) {
    if (rest.rfind(prefix, 0) == 0) {
      rest = rest.substr(prefix.size());
      return true;
    }
    return false;
  };
  bool temporal = strip("t_");
  bool ratio = temporal && strip("ratio_");
  bool binary = temporal && !ratio && strip("binary_");
  bool count = rest.size() > 6 && rest.substr(rest.size() - 6) == "_count";
  rest = rest.substr(0, rest.rfind('_'));
  if (!temporal) kind = count ? "count" : "pmi";
  else if (ratio) kind = "ratio";
  else if (binary) kind = "binary";
  else kind = "fc";

  if (rest == "weeds_pr") return wp(kind, p, q);
  if (rest == "weeds_rec") return wp(kind, q, p);
  if (rest == "weeds_sim") return Harmonic(wp(kind, p, q), wp(kind, q, p));
  if (rest == "lin") return lin(kind);
  if (rest == "binc") return std::sqrt(lin(kind) * wp(kind, p, q));
  return -1.0;  // unknown id
}

// Precision and recall at each distinct positive score, by full rescan.
struct CurvePoint {
  double recall;
  double precision;
};

inline std::vector<CurvePoint> RescanCurve(const std::vector<std::pair<double, bool>> &scored) {
  std::set<double, std::greater<double>> thresholds;
  size_t positives = 0;
  for (const auto &[s, pos] : scored) {
    if (s > 0) thresholds.insert(s);
    positives += pos;
  }
  std::vector<CurvePoint> out;
  for (double t : thresholds) {
    size_t tp = 0, n = 0;
    for (const auto &[s, pos] : scored) {
      if (s >= t) {
        ++n;
        tp += pos;
      }
    }
    out.push_back({double(tp) / positives, double(tp) / n});
  }
  return out;
}

// Midpoint quadrature of the piecewise-linear curve starting at
// (0, first precision), up to `cap`.
inline double QuadratureAuc(const std::vector<CurvePoint> &pts, double cap, int steps = 200000) {
  if (pts.empty()) return 0.0;
  std::vector<CurvePoint> curve{{0.0, pts.front().precision}};
  curve.insert(curve.end(), pts.begin(), pts.end());
  double end = std::min(cap, curve.back().recall);
  double h = end / steps, area = 0;
  size_t seg = 0;
  for (int i = 0; i < steps; ++i) {
    double r = (i + 0.5) * h;
    while (seg + 1 < curve.size() && curve[seg + 1].recall < r) ++seg;
    const auto &a = curve[seg];
    const auto &b = curve[std::min(seg + 1, curve.size() - 1)];
    double y = b.precision;
    if (b.recall > a.recall) {
      y = a.precision + (b.precision - a.precision) * (r - a.recall) / (b.recall - a.recall);
    }
    area += y * h;
  }
  return area;
}

}  // namespace tempograph::reference

#endif  // TEMPOGRAPH_TESTS_REFERENCE_BRUTE_FORCE_H_
