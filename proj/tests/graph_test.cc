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

#include <gtest/gtest.h>
#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "tempograph/errors.h"
#include "test_util.h"

namespace tempograph {
namespace {

using testing::Instance;

std::string Serialize(const EntailmentGraph &g) {
  std::ostringstream out;
  WriteGraph(out, g);
  return out.str();
}

EntailmentGraph Parse(const std::string &text) {
  std::istringstream in(text);
  return ReadGraph(in);
}

EntailmentGraph WorkedGraph() {
  GraphOptions opt;
  opt.source = TimeSource::kDocDateOnly;
  opt.window = {0};
  return BuildGraph(Corpus(testing::WorkedExample()), opt);
}

TEST(BuildGraphTest, WorkedExample) {
  auto g = WorkedGraph();
  EXPECT_EQ(g.nodes, (std::vector<std::string>{"lose", "play", "win"}));
  EXPECT_EQ(g.header.type_pair, "organization#organization");
  EXPECT_EQ(g.header.measures.size(), 29u);
  EXPECT_EQ(g.edges.size(), 6u);
  size_t binc = *g.MeasureIndex("t_binc_count");
  size_t plain = *g.MeasureIndex("binc_count");
  EXPECT_GT(g.ScoreOf("win", "play", binc), 0.0);
  EXPECT_GT(g.ScoreOf("lose", "play", binc), 0.0);
  EXPECT_EQ(g.ScoreOf("win", "lose", binc), 0.0);
  EXPECT_EQ(g.ScoreOf("lose", "win", binc), 0.0);
  EXPECT_GT(g.ScoreOf("win", "lose", plain), 0.0);
  EXPECT_EQ(g.ScoreOf("win", "draw", plain), 0.0);
  for (const auto &e : g.edges) {
    EXPECT_LT(e.from, g.nodes.size());
    EXPECT_LT(e.to, g.nodes.size());
    for (double s : e.scores) {
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, 1.0);
    }
  }
}

TEST(BuildGraphTest, Errors) {
  EXPECT_THROW(BuildGraph(Corpus{}, {}), DataError);
  auto mixed = testing::WorkedExample();
  mixed[0].predicate.type2 = "location";
  EXPECT_THROW(BuildGraph(Corpus(mixed), {}), DataError);
}

TEST(BuildGraphTest, MinCountDropsRarePredicates) {
  auto recs = testing::WorkedExample();
  GraphOptions opt;
  opt.min_count = 2;
  auto g = BuildGraph(Corpus(recs), opt);
  EXPECT_EQ(g.nodes, (std::vector<std::string>{"play"}));
  EXPECT_TRUE(g.edges.empty());
}

TEST(BuildGraphTest, CanonicalBytesUnderPermutationAndThreads) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    auto instances = testing::RandomMicroCorpus(rng, {.max_predicates = 7, .max_pairs = 6});
    GraphOptions opt;
    std::string base = Serialize(BuildGraph(Corpus(instances), opt));
    std::shuffle(instances.begin(), instances.end(), rng);
    opt.threads = 4;
    EXPECT_EQ(Serialize(BuildGraph(Corpus(instances), opt)), base);
  }
}

TEST(GraphIoTest, WorkedExampleRoundTrip) {
  auto g = WorkedGraph();
  std::string text = Serialize(g);
  EXPECT_EQ(Parse(text), g);
  EXPECT_EQ(Serialize(Parse(text)), text);
}

TEST(GraphIoTest, EmptyGraphRoundTrip) {
  EntailmentGraph g;
  EXPECT_EQ(Parse(Serialize(g)), g);
  g.header.measures = {"lin_pmi", "cosine"};
  g.nodes = {"only"};
  EXPECT_EQ(Parse(Serialize(g)), g);
}

EntailmentGraph RandomGraph(std::mt19937_64 &rng, size_t num_edges) {
  EntailmentGraph g;
  g.header = {"organization#organization", "both", 7, "single", "filtered",
              {"lin_pmi", "t_binc_count", "cosine"}};
  for (int i = 0; i < 60; ++i) g.nodes.push_back("pred" + std::to_string(1000 + i));
  std::set<std::pair<uint32_t, uint32_t>> keys;
  while (keys.size() < num_edges) {
    uint32_t a = rng() % 60, b = rng() % 60;
    if (a != b) keys.insert({a, b});
  }
  const double special[] = {0.0, 1.0, 0.1, 1.0 / 3.0, std::numeric_limits<double>::min(),
                            std::numeric_limits<double>::denorm_min(),
                            std::nextafter(1.0, 0.0)};
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto [a, b] : keys) {
    GraphEdge e{a, b, {}};
    for (int k = 0; k < 3; ++k) e.scores.push_back(rng() % 5 == 0 ? special[rng() % 7] : u(rng));
    g.edges.push_back(e);
  }
  return g;
}

TEST(GraphIoTest, RandomThousandEdgeRoundTrip) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = RandomGraph(rng, 1000);
    std::string text = Serialize(g);
    auto back = Parse(text);
    ASSERT_EQ(back.edges.size(), 1000u);
    EXPECT_EQ(back.header, g.header);
    EXPECT_EQ(back.nodes, g.nodes);
    for (size_t i = 0; i < g.edges.size(); ++i) {
      ASSERT_EQ(back.edges[i].from, g.edges[i].from);
      ASSERT_EQ(back.edges[i].to, g.edges[i].to);
      for (size_t k = 0; k < 3; ++k) ASSERT_EQ(back.edges[i].scores[k], g.edges[i].scores[k]);
    }
    EXPECT_EQ(Serialize(back), text);
    size_t lines = std::count(text.begin(), text.end(), '\n');
    EXPECT_EQ(lines, 8 + g.nodes.size() + 1 + g.edges.size());
  }
}

TEST(GraphIoTest, FilesPlainAndGzip) {
  testing::TempDir dir;
  std::mt19937_64 rng(83);
  auto g = RandomGraph(rng, 200);
  WriteGraphFile(dir.File("g.tsv"), g);
  EXPECT_EQ(ReadGraphFile(dir.File("g.tsv")), g);

  std::string text = Serialize(g);
  gzFile f = gzopen(dir.File("g.tsv.gz").c_str(), "wb");
  ASSERT_NE(f, nullptr);
  ASSERT_EQ(gzwrite(f, text.data(), static_cast<unsigned>(text.size())),
            static_cast<int>(text.size()));
  gzclose(f);
  EXPECT_EQ(ReadGraphFile(dir.File("g.tsv.gz")), g);
  EXPECT_THROW(ReadGraphFile(dir.File("missing.tsv")), DataError);
}

std::string ErrorOf(const std::string &text) {
  try {
    Parse(text);
  } catch (const DataError &e) {
    return e.what();
  }
  return "";
}

TEST(GraphIoTest, MalformedFilesReportLine) {
  std::string good = Serialize(WorkedGraph());
  auto replace = [&](const std::string &from, const std::string &to) {
    std::string t = good;
    size_t pos = t.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return t.replace(pos, from.size(), to);
  };
  struct Case {
    std::string text;
    std::string line;
    std::string what;
  } cases[] = {
      {"", "line 1", "unexpected end"},
      {"hello\t1\n", "line 1", "not a tempograph"},
      {replace("tempograph-graph\t1", "tempograph-graph\t9"), "line 1", "version"},
      {replace("window\t0", "window\tzero"), "line 4", "not an integer"},
      {replace("nodes\t3\nlose\nplay", "nodes\t3\nplay\nlose"), "line 10", "not sorted"},
      {good.substr(0, good.size() - 20), "line 18", "fields"},
      {replace("lose\tplay\t", "lose\tdraw\t"), "line 13", "not a node"},
      {replace("lose\tplay\t", "lose\tlose\t"), "line 13", "self edge"},
      {good + "extra\n", "line 19", "trailing"},
  };
  for (const auto &c : cases) {
    std::string err = ErrorOf(c.text);
    EXPECT_NE(err.find(c.line), std::string::npos) << err;
    EXPECT_NE(err.find(c.what), std::string::npos) << err;
  }
  std::string bad_score = good;
  size_t tab = bad_score.rfind('\t');
  bad_score.replace(tab + 1, bad_score.size() - tab - 2, "1.5");
  EXPECT_NE(ErrorOf(bad_score).find("outside [0,1]"), std::string::npos);
  std::string nan = good;
  nan.replace(tab + 1, nan.size() - tab - 2, "nan");
  EXPECT_NE(ErrorOf(nan).find("outside [0,1]"), std::string::npos);
}

}  // namespace
}  // namespace tempograph
