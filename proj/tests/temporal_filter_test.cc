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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "reference/brute_force.h"
#include "test_util.h"

namespace tempograph {
namespace {

using testing::Instance;

int64_t FilteredByName(const Corpus &c, const EvidenceSet &ev, const std::string &p,
                       const std::string &q, const EntityPairId &ep) {
  auto pi = c.FindPredicate({p, "organization", "organization"});
  auto qi = c.FindPredicate({q, "organization", "organization"});
  auto e = c.FindPair(ep);
  if (!pi || !qi || !e) return -1;
  const EdgeEvidence *edge = ev.Find(*pi, *qi);
  return edge ? edge->Filtered(*e) : -1;
}

reference::Source RefSource(TimeSource s) {
  switch (s) {
    case TimeSource::kTimexOnly:
      return reference::Source::kTimex;
    case TimeSource::kDocDateOnly:
      return reference::Source::kDocDate;
    case TimeSource::kTimexAndDocDate:
      return reference::Source::kBoth;
  }
  return reference::Source::kBoth;
}

TEST(TemporalFilterTest, WorkedExample) {
  Corpus c(testing::WorkedExample());
  auto ev = TemporalFilter(c, {.source = TimeSource::kDocDateOnly, .window = {0}});
  EntityPairId ars{"Arsenal", "Man United"};
  EXPECT_EQ(FilteredByName(c, ev, "win", "play", ars), 1);
  EXPECT_EQ(FilteredByName(c, ev, "lose", "play", ars), 1);
  EXPECT_EQ(FilteredByName(c, ev, "win", "lose", ars), 0);
  EXPECT_EQ(FilteredByName(c, ev, "lose", "win", ars), 0);
  // Each play event sits next to exactly one outcome event.
  EXPECT_EQ(FilteredByName(c, ev, "play", "win", ars), 1);
  EXPECT_EQ(FilteredByName(c, ev, "play", "lose", ars), 1);
  // All six directed edges exist; the two outcome edges carry zero evidence.
  EXPECT_EQ(ev.size(), 6u);
}

TEST(TemporalFilterTest, SinglePredicateYieldsNoEdges) {
  Corpus c({Instance("win", "a", "b", 1), Instance("win", "a", "b", 2),
            Instance("lose", "c", "d", 2)});
  EXPECT_EQ(TemporalFilter(c, {.window = {30}}).size(), 0u);
}

TEST(TemporalFilterTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(41);
  testing::MicroLimits lim{.max_predicates = 5, .max_pairs = 4, .max_instances = 6};
  for (int trial = 0; trial < 400; ++trial) {
    auto instances = testing::RandomMicroCorpus(rng, lim);
    Corpus c(instances);
    for (TimeSource src : kAllTimeSources) {
      for (int64_t w : {0, 2, 7}) {
        for (WindowMode mode : {WindowMode::kBoth, WindowMode::kSingle}) {
          Window window{w, mode};
          auto ev = TemporalFilter(c, {.source = src, .window = window});
          auto want = reference::FilteredCounts(instances, RefSource(src),
                                                window.first_extension(),
                                                window.second_extension());
          size_t features = 0;
          for (const auto &edge : ev.edges()) features += edge.features.size();
          ASSERT_EQ(features, want.size());
          for (const auto &[key, n] : want) {
            const auto &[p, q, ep] = key;
            auto bar = ep.find('|');
            EntityPairId id{ep.substr(0, bar), ep.substr(bar + 1)};
            ASSERT_EQ(FilteredByName(c, ev, p, q, id), n)
                << p << "->" << q << " @" << ep << " w=" << w;
          }
        }
      }
    }
  }
}

TEST(TemporalFilterTest, Invariants) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Corpus c(testing::RandomMicroCorpus(rng, {.max_predicates = 5, .max_pairs = 4}));
    EvidenceSet prev;
    for (int64_t w : {0, 1, 3, 8, 20}) {
      auto ev = TemporalFilter(c, {.window = {w}});
      for (const auto &edge : ev.edges()) {
        ASSERT_NE(edge.from, edge.to);
        int64_t total = 0;
        for (const auto &f : edge.features) {
          ASSERT_GE(f.filtered, 0);
          ASSERT_LE(f.filtered, c.Count(edge.from, f.pair));
          ASSERT_GT(c.Count(edge.to, f.pair), 0);
          const EdgeEvidence *back = ev.Find(edge.to, edge.from);
          ASSERT_NE(back, nullptr);
          EXPECT_EQ(f.filtered > 0, back->Filtered(f.pair) > 0);
          if (const EdgeEvidence *old = prev.Find(edge.from, edge.to)) {
            EXPECT_GE(f.filtered, old->Filtered(f.pair));
          }
          total += f.filtered;
        }
        EXPECT_EQ(total, edge.total_filtered);
        EXPECT_LE(edge.total_filtered, c.PredicateCount(edge.from));
      }
      prev = std::move(ev);
    }
  }
}

TEST(TemporalFilterTest, HugeWindowSaturates) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    // Six weeks of fully dated events.
    auto instances = testing::RandomMicroCorpus(
        rng, {.max_predicates = 5, .max_pairs = 4, .max_day = 42, .doc_date_probability = 1.0});
    Corpus c(instances);
    auto ev = TemporalFilter(c, {.window = {3650}});
    for (const auto &edge : ev.edges()) {
      for (const auto &f : edge.features) {
        EXPECT_EQ(f.filtered, c.Count(edge.from, f.pair));
      }
    }
  }
}

TEST(TemporalFilterTest, UntimedInstancesNeverOverlap) {
  Corpus c({Instance("win", "a", "b", std::nullopt), Instance("play", "a", "b", 5),
            Instance("play", "a", "b", std::nullopt)});
  auto ev = TemporalFilter(c, {.window = {3650}});
  EntityPairId ab{"a", "b"};
  EXPECT_EQ(FilteredByName(c, ev, "win", "play", ab), 0);
  EXPECT_EQ(FilteredByName(c, ev, "play", "win", ab), 0);
}

TEST(TemporalFilterTest, MultiTimexInstanceCountsOnce) {
  Corpus c({Instance("win", "a", "b", std::nullopt, {{1, 1}, {10, 10}}),
            Instance("play", "a", "b", std::nullopt, {{1, 1}}),
            Instance("play", "a", "b", std::nullopt, {{10, 10}})});
  auto ev = TemporalFilter(c, {.source = TimeSource::kTimexOnly, .window = {0}});
  EntityPairId ab{"a", "b"};
  EXPECT_EQ(FilteredByName(c, ev, "win", "play", ab), 1);
  EXPECT_EQ(FilteredByName(c, ev, "play", "win", ab), 2);
}

TEST(TemporalFilterTest, DeterministicAcrossThreadsAndOrder) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto instances = testing::RandomMicroCorpus(rng, {.max_predicates = 6, .max_pairs = 6});
    std::string base;
    {
      Corpus c(instances);
      std::ostringstream out;
      DumpEvidence(out, c, TemporalFilter(c, {.window = {3}}));
      base = out.str();
    }
    std::shuffle(instances.begin(), instances.end(), rng);
    for (int threads : {1, 2, 5, 16}) {
      Corpus c(instances);
      std::ostringstream out;
      DumpEvidence(out, c, TemporalFilter(c, {.window = {3}, .threads = threads}));
      EXPECT_EQ(out.str(), base);
    }
  }
}

TEST(TemporalFilterTest, InactivePredicatesAreSkipped) {
  Corpus c(testing::WorkedExample());
  auto play = c.FindPredicate({"play", "organization", "organization"});
  std::vector<bool> active(c.num_predicates(), true);
  active[*play] = false;
  auto ev = TemporalFilter(c, {.window = {0}, .active = active});
  EXPECT_EQ(ev.size(), 2u);
  for (const auto &edge : ev.edges()) {
    EXPECT_NE(edge.from, *play);
    EXPECT_NE(edge.to, *play);
  }
}

}  // namespace
}  // namespace tempograph
