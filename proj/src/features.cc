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

#include "tempograph/features.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "tempograph/errors.h"
#include "tempograph/parallel.h"

namespace tempograph {

const FeatureEntry *FeatureVector::Find(PairIndex pair) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), pair,
      [](const FeatureEntry &e, PairIndex v) { return e.pair < v; });
  if (it == entries.end() || it->pair != pair) return nullptr;
  return &*it;
}

int64_t FeatureVector::CountTotal() const {
  int64_t sum = 0;
  for (const auto &e : entries) sum += e.count;
  return sum;
}

double FeatureVector::PmiTotal() const {
  double sum = 0.0;
  for (const auto &e : entries) sum += e.pmi;
  return sum;
}

FeatureSpace BuildVectors(const Corpus &corpus, const VectorOptions &options) {
  if (corpus.empty()) throw DataError("no evidence: corpus is empty");

  FeatureSpace space;
  CountTables &t = space.tables;
  t.predicate_totals.resize(corpus.num_predicates());
  t.pair_totals.resize(corpus.num_pairs());
  for (PredicateIndex p = 0; p < corpus.num_predicates(); ++p) {
    t.predicate_totals[p] = corpus.PredicateCount(p);
    t.total += t.predicate_totals[p];
  }
  for (PairIndex ep = 0; ep < corpus.num_pairs(); ++ep) {
    t.pair_totals[ep] = corpus.PairCount(ep);
  }

  // Each predicate's vector is computed independently from the shared
  // marginals, so workers own disjoint slices of `vectors`.
  space.vectors.resize(corpus.num_predicates());
  const double total = static_cast<double>(t.total);
  ParallelChunks(corpus.num_predicates(), options.threads,
                 [&](size_t, size_t begin, size_t end) {
    for (size_t p = begin; p < end; ++p) {
      FeatureVector &v = space.vectors[p];
      v.predicate = static_cast<PredicateIndex>(p);
      const double cp = static_cast<double>(t.predicate_totals[p]);
      for (uint32_t cell_index : corpus.CellsForPredicate(v.predicate)) {
        const auto &cell = corpus.cells()[cell_index];
        const int64_t c = static_cast<int64_t>(cell.instances.size());
        const double cep = static_cast<double>(t.pair_totals[cell.pair]);
        double pmi = std::log(static_cast<double>(c) * total / (cp * cep));
        if (options.clamp_pmi) pmi = std::max(0.0, pmi);
        v.entries.push_back({cell.pair, c, pmi});
      }
    }
  });
  return space;
}

double Cosine(const FeatureVector &p, const FeatureVector &q) {
  double dot = 0.0, np = 0.0, nq = 0.0;
  for (const auto &e : p.entries) np += e.pmi * e.pmi;
  for (const auto &e : q.entries) nq += e.pmi * e.pmi;
  if (np == 0.0 || nq == 0.0) return 0.0;
  auto a = p.entries.begin(), b = q.entries.begin();
  while (a != p.entries.end() && b != q.entries.end()) {
    if (a->pair < b->pair) {
      ++a;
    } else if (b->pair < a->pair) {
      ++b;
    } else {
      dot += a->pmi * b->pmi;
      ++a;
      ++b;
    }
  }
  double c = dot / std::sqrt(np * nq);
  return std::clamp(c, 0.0, 1.0);
}

void DumpVectors(std::ostream &out, const Corpus &corpus, const FeatureSpace &space) {
  std::vector<std::string> lines;
  char num[64];
  for (const auto &v : space.vectors) {
    const auto &pred = corpus.predicate(v.predicate);
    for (const auto &e : v.entries) {
      const auto &ep = corpus.pair(e.pair);
      std::snprintf(num, sizeof(num), "%.17g", e.pmi);
      lines.push_back(pred.name + "[" + pred.TypePair() + "]\t" + ep.arg1 + "|" +
                      ep.arg2 + "\t" + std::to_string(e.count) + "\t" + num);
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const auto &l : lines) out << l << '\n';
}

}  // namespace tempograph
