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

#include "tempograph/temporal_filter.h"

#include <algorithm>
#include <ostream>
#include <string>

#include "tempograph/parallel.h"

namespace tempograph {

namespace {

struct Record {
  PredicateIndex from;
  PredicateIndex to;
  PairIndex pair;
  int64_t filtered;
};

// Sorted, disjoint union of every interval in a cell, each extended by
// `extension` days.
std::vector<TimeInterval> CellUnion(const Corpus::Cell &cell,
                                    const std::vector<std::vector<TimeInterval>> &resolved,
                                    int64_t extension) {
  std::vector<TimeInterval> all;
  for (uint32_t i : cell.instances) {
    for (const auto &iv : resolved[i]) all.push_back(Extend(iv, extension));
  }
  std::sort(all.begin(), all.end());
  std::vector<TimeInterval> merged;
  for (const auto &iv : all) {
    if (!merged.empty() && iv.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, iv.end);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

bool HitsUnion(const std::vector<TimeInterval> &merged, TimeInterval query) {
  // Ends are strictly increasing in a disjoint sorted union.
  auto it = std::lower_bound(
      merged.begin(), merged.end(), query.start,
      [](const TimeInterval &iv, Day v) { return iv.end < v; });
  return it != merged.end() && it->start <= query.end;
}

// Number of instances in `cell` with at least one interval (extended by
// `extension`) that meets `other_union`.
int64_t CountOverlapping(const Corpus::Cell &cell,
                         const std::vector<std::vector<TimeInterval>> &resolved,
                         int64_t extension,
                         const std::vector<TimeInterval> &other_union) {
  if (other_union.empty()) return 0;
  int64_t n = 0;
  for (uint32_t i : cell.instances) {
    for (const auto &iv : resolved[i]) {
      if (HitsUnion(other_union, Extend(iv, extension))) {
        ++n;
        break;
      }
    }
  }
  return n;
}

}  // namespace

int64_t EdgeEvidence::Filtered(PairIndex pair) const {
  auto it = std::lower_bound(
      features.begin(), features.end(), pair,
      [](const FilteredFeature &f, PairIndex v) { return f.pair < v; });
  if (it == features.end() || it->pair != pair) return 0;
  return it->filtered;
}

EvidenceSet::EvidenceSet(std::vector<EdgeEvidence> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const EdgeEvidence &a, const EdgeEvidence &b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
}

const EdgeEvidence *EvidenceSet::Find(PredicateIndex from, PredicateIndex to) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair(from, to),
      [](const EdgeEvidence &e, const std::pair<PredicateIndex, PredicateIndex> &k) {
        return e.from != k.first ? e.from < k.first : e.to < k.second;
      });
  if (it == edges_.end() || it->from != from || it->to != to) return nullptr;
  return &*it;
}

EvidenceSet TemporalFilter(const Corpus &corpus, const FilterOptions &options) {
  auto is_active = [&](PredicateIndex p) {
    return options.active.empty() || options.active[p];
  };

  std::vector<std::vector<TimeInterval>> resolved(corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    resolved[i] = ResolveIntervals(corpus.instances()[i], options.source);
  }

  const int64_t own_ext = options.window.first_extension();
  const int64_t other_ext = options.window.second_extension();
  const size_t chunks = ChunkCount(corpus.num_pairs(), options.threads);
  std::vector<std::vector<Record>> partial(chunks);

  ParallelChunks(corpus.num_pairs(), options.threads,
                 [&](size_t chunk, size_t begin, size_t end) {
    auto &out = partial[chunk];
    for (size_t ep = begin; ep < end; ++ep) {
      std::vector<const Corpus::Cell *> cells;
      for (const auto &cell : corpus.CellsForPair(static_cast<PairIndex>(ep))) {
        if (is_active(cell.predicate)) cells.push_back(&cell);
      }
      if (cells.size() < 2) continue;
      std::vector<std::vector<TimeInterval>> unions;
      unions.reserve(cells.size());
      for (const auto *cell : cells) unions.push_back(CellUnion(*cell, resolved, other_ext));
      for (size_t i = 0; i < cells.size(); ++i) {
        for (size_t j = i + 1; j < cells.size(); ++j) {
          const auto &p = *cells[i];
          const auto &q = *cells[j];
          out.push_back({p.predicate, q.predicate, p.pair,
                         CountOverlapping(p, resolved, own_ext, unions[j])});
          out.push_back({q.predicate, p.predicate, q.pair,
                         CountOverlapping(q, resolved, own_ext, unions[i])});
        }
      }
    }
  });

  std::vector<Record> records;
  for (auto &part : partial) records.insert(records.end(), part.begin(), part.end());
  std::sort(records.begin(), records.end(), [](const Record &a, const Record &b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.pair < b.pair;
  });

  std::vector<EdgeEvidence> edges;
  for (const auto &r : records) {
    if (edges.empty() || edges.back().from != r.from || edges.back().to != r.to) {
      edges.push_back({r.from, r.to, {}, 0});
    }
    edges.back().features.push_back({r.pair, r.filtered});
    edges.back().total_filtered += r.filtered;
  }
  return EvidenceSet(std::move(edges));
}

void DumpEvidence(std::ostream &out, const Corpus &corpus, const EvidenceSet &evidence) {
  std::vector<std::string> lines;
  for (const auto &e : evidence.edges()) {
    for (const auto &f : e.features) {
      const auto &ep = corpus.pair(f.pair);
      lines.push_back(corpus.predicate(e.from).name + "\t" + corpus.predicate(e.to).name +
                      "\t" + ep.arg1 + "|" + ep.arg2 + "\t" + std::to_string(f.filtered));
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const auto &l : lines) out << l << '\n';
}

}  // namespace tempograph
