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

#include "tempograph/graph.h"

#include <zlib.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tempograph/errors.h"
#include "tempograph/features.h"
#include "tempograph/temporal_filter.h"

namespace tempograph {

namespace {

constexpr char kMagic[] = "tempograph-graph";
constexpr char kVersion[] = "1";

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

std::string FormatScore(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class LineReader {
 public:
  explicit LineReader(std::istream &in) : in_(in) {}

  std::string Next(const char *expecting) {
    std::string line;
    ++line_no_;
    if (!std::getline(in_, line)) {
      Fail(std::string("unexpected end of file, expecting ") + expecting);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  bool AtEnd() {
    return in_.peek() == std::char_traits<char>::eof();
  }

  [[noreturn]] void Fail(const std::string &msg) const {
    throw DataError("graph file line " + std::to_string(line_no_) + ": " + msg);
  }

  // Reads "key \t value..." and returns the values.
  std::vector<std::string> Field(const char *key, size_t min_values) {
    auto parts = SplitTabs(Next(key));
    if (parts[0] != key) Fail(std::string("expected '") + key + "', found '" + parts[0] + "'");
    if (parts.size() - 1 < min_values) Fail(std::string("'") + key + "' is missing its value");
    parts.erase(parts.begin());
    return parts;
  }

  int64_t ParseCount(const std::string &s) {
    char *end = nullptr;
    errno = 0;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0' || errno != 0) Fail("'" + s + "' is not an integer");
    return v;
  }

 private:
  std::istream &in_;
  size_t line_no_ = 0;
};

}  // namespace

std::optional<uint32_t> EntailmentGraph::FindNode(const std::string &name) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), name);
  if (it == nodes.end() || *it != name) return std::nullopt;
  return static_cast<uint32_t>(it - nodes.begin());
}

const GraphEdge *EntailmentGraph::FindEdge(uint32_t from, uint32_t to) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair(from, to),
                             [](const GraphEdge &e, const std::pair<uint32_t, uint32_t> &k) {
                               return e.from != k.first ? e.from < k.first : e.to < k.second;
                             });
  if (it == edges.end() || it->from != from || it->to != to) return nullptr;
  return &*it;
}

std::optional<size_t> EntailmentGraph::MeasureIndex(const std::string &id) const {
  auto it = std::find(header.measures.begin(), header.measures.end(), id);
  if (it == header.measures.end()) return std::nullopt;
  return static_cast<size_t>(it - header.measures.begin());
}

double EntailmentGraph::ScoreOf(const std::string &premise, const std::string &hypothesis,
                                size_t measure) const {
  auto from = FindNode(premise);
  auto to = FindNode(hypothesis);
  if (!from || !to) return 0.0;
  const GraphEdge *e = FindEdge(*from, *to);
  return e ? e->scores[measure] : 0.0;
}

std::vector<bool> ActivePredicates(const Corpus &corpus, int64_t min_count) {
  if (min_count <= 0) return {};
  std::vector<bool> active(corpus.num_predicates());
  for (PredicateIndex p = 0; p < corpus.num_predicates(); ++p) {
    active[p] = corpus.PredicateCount(p) >= min_count;
  }
  return active;
}

EntailmentGraph AssembleGraph(const Corpus &corpus, const ScoreMatrix &scores,
                              const GraphOptions &options) {
  auto type_pairs = corpus.TypePairs();
  if (type_pairs.size() > 1) {
    throw DataError("corpus mixes " + std::to_string(type_pairs.size()) +
                    " type pairs; filter it to one type pair first");
  }
  EntailmentGraph g;
  g.header.type_pair = type_pairs.empty() ? "" : type_pairs.front();
  g.header.time_source = std::string(TimeSourceName(options.source));
  g.header.window = options.window.days;
  g.header.window_mode = std::string(WindowModeName(options.window.mode));
  g.header.denominator = std::string(DenominatorName(options.denominator));
  for (const auto &m : scores.measures) g.header.measures.push_back(m.id);

  auto active = ActivePredicates(corpus, options.min_count);
  // Predicate order equals name order within one type pair.
  std::vector<uint32_t> node_of(corpus.num_predicates(), UINT32_MAX);
  for (PredicateIndex p = 0; p < corpus.num_predicates(); ++p) {
    if (!active.empty() && !active[p]) continue;
    node_of[p] = static_cast<uint32_t>(g.nodes.size());
    g.nodes.push_back(corpus.predicate(p).name);
  }
  for (const auto &row : scores.rows) {
    if (node_of[row.from] == UINT32_MAX || node_of[row.to] == UINT32_MAX) continue;
    g.edges.push_back({node_of[row.from], node_of[row.to], row.values});
  }
  return g;
}

EntailmentGraph BuildGraph(const Corpus &corpus, const GraphOptions &options) {
  if (corpus.empty()) throw DataError("no evidence: corpus is empty");
  if (corpus.TypePairs().size() > 1) {
    throw DataError("corpus mixes type pairs; filter it to one type pair first");
  }
  FeatureSpace space = BuildVectors(corpus, {.clamp_pmi = true, .threads = options.threads});
  FilterOptions filter;
  filter.source = options.source;
  filter.window = options.window;
  filter.threads = options.threads;
  filter.active = ActivePredicates(corpus, options.min_count);
  EvidenceSet evidence = TemporalFilter(corpus, filter);
  ScoreMatrix scores =
      ScoreAll(space, evidence, options.measures, options.denominator, options.threads);
  return AssembleGraph(corpus, scores, options);
}

void WriteGraph(std::ostream &out, const EntailmentGraph &g) {
  out << kMagic << '\t' << kVersion << '\n';
  out << "type_pair\t" << g.header.type_pair << '\n';
  out << "time_source\t" << g.header.time_source << '\n';
  out << "window\t" << g.header.window << '\n';
  out << "window_mode\t" << g.header.window_mode << '\n';
  out << "denominator\t" << g.header.denominator << '\n';
  out << "measures";
  for (const auto &m : g.header.measures) out << '\t' << m;
  out << '\n';
  out << "nodes\t" << g.nodes.size() << '\n';
  for (const auto &n : g.nodes) out << n << '\n';
  out << "edges\t" << g.edges.size() << '\n';
  for (const auto &e : g.edges) {
    out << g.nodes[e.from] << '\t' << g.nodes[e.to];
    for (double s : e.scores) out << '\t' << FormatScore(s);
    out << '\n';
  }
}

void WriteGraphFile(const std::string &path, const EntailmentGraph &graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write graph file '" + path + "'");
  WriteGraph(out, graph);
  if (!out) throw DataError("error writing graph file '" + path + "'");
}

EntailmentGraph ReadGraph(std::istream &in) {
  LineReader r(in);
  EntailmentGraph g;
  auto magic = SplitTabs(r.Next("header"));
  if (magic.size() != 2 || magic[0] != kMagic) r.Fail("not a tempograph graph file");
  if (magic[1] != kVersion) r.Fail("unsupported graph format version '" + magic[1] + "'");
  g.header.type_pair = r.Field("type_pair", 1)[0];
  g.header.time_source = r.Field("time_source", 1)[0];
  g.header.window = r.ParseCount(r.Field("window", 1)[0]);
  g.header.window_mode = r.Field("window_mode", 1)[0];
  g.header.denominator = r.Field("denominator", 1)[0];
  g.header.measures = r.Field("measures", 0);
  if (g.header.measures.size() == 1 && g.header.measures[0].empty()) g.header.measures.clear();

  int64_t num_nodes = r.ParseCount(r.Field("nodes", 1)[0]);
  if (num_nodes < 0) r.Fail("negative node count");
  for (int64_t i = 0; i < num_nodes; ++i) {
    std::string name = r.Next("node name");
    if (name.empty() || name.find('\t') != std::string::npos) r.Fail("bad node name");
    if (!g.nodes.empty() && !(g.nodes.back() < name)) r.Fail("nodes not sorted or not unique");
    g.nodes.push_back(std::move(name));
  }

  int64_t num_edges = r.ParseCount(r.Field("edges", 1)[0]);
  if (num_edges < 0) r.Fail("negative edge count");
  const size_t width = g.header.measures.size();
  for (int64_t i = 0; i < num_edges; ++i) {
    auto parts = SplitTabs(r.Next("edge"));
    if (parts.size() != 2 + width) {
      r.Fail("edge has " + std::to_string(parts.size()) + " fields, expected " +
             std::to_string(2 + width));
    }
    auto from = g.FindNode(parts[0]);
    auto to = g.FindNode(parts[1]);
    if (!from || !to) r.Fail("edge endpoint is not a node");
    if (*from == *to) r.Fail("self edge");
    GraphEdge e{*from, *to, {}};
    for (size_t k = 0; k < width; ++k) {
      const std::string &s = parts[2 + k];
      char *end = nullptr;
      double v = std::strtod(s.c_str(), &end);
      if (s.empty() || *end != '\0') r.Fail("'" + s + "' is not a number");
      if (!(v >= 0.0 && v <= 1.0)) r.Fail("score " + s + " outside [0,1]");
      e.scores.push_back(v);
    }
    if (!g.edges.empty() && !(std::pair(g.edges.back().from, g.edges.back().to) <
                              std::pair(e.from, e.to))) {
      r.Fail("edges not sorted or duplicated");
    }
    g.edges.push_back(std::move(e));
  }
  while (!r.AtEnd()) {
    if (!r.Next("end of file").empty()) r.Fail("trailing data after edges");
  }
  return g;
}

EntailmentGraph ReadGraphFile(const std::string &path) {
  // gzread passes uncompressed files through unchanged.
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) throw DataError("cannot open graph file '" + path + "'");
  std::string data;
  char buf[1 << 16];
  int n;
  while ((n = gzread(f, buf, sizeof(buf))) > 0) data.append(buf, static_cast<size_t>(n));
  int err = 0;
  const char *msg = gzerror(f, &err);
  bool failed = n < 0 || (err != Z_OK && err != Z_STREAM_END);
  std::string why = failed ? msg : "";
  gzclose(f);
  if (failed) throw DataError("cannot read graph file '" + path + "': " + why);
  std::istringstream in(data);
  return ReadGraph(in);
}

}  // namespace tempograph
