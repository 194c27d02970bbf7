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

#ifndef TEMPOGRAPH_TESTS_TEST_UTIL_H_
#define TEMPOGRAPH_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tempograph/relation.h"

namespace tempograph::testing {

inline RelationInstance Instance(const std::string &pred, const std::string &arg1,
                                 const std::string &arg2, std::optional<Day> doc_date,
                                 std::vector<TimeInterval> timexes = {},
                                 const std::string &doc_id = "d") {
  RelationInstance r;
  r.predicate = {pred, "organization", "organization"};
  r.entity_pair = {arg1, arg2};
  r.timex_intervals = std::move(timexes);
  r.doc_date = doc_date;
  r.doc_id = doc_id;
  return r;
}

inline Day Date(const char *iso) { return *ParseIsoDate(iso); }

// Two Arsenal v Man United matches: a win on 2018-03-10 and a loss on
// 2019-01-25, each article also stating that the teams played.
inline std::vector<RelationInstance> WorkedExample() {
  return {
      Instance("play", "Arsenal", "Man United", Date("2018-03-10"), {}, "a1"),
      Instance("win", "Arsenal", "Man United", Date("2018-03-10"), {}, "a1"),
      Instance("play", "Arsenal", "Man United", Date("2019-01-25"), {}, "a2"),
      Instance("lose", "Arsenal", "Man United", Date("2019-01-25"), {}, "a2"),
  };
}

struct MicroLimits {
  int max_predicates = 4;
  int max_pairs = 3;
  int max_instances = 5;  // per (predicate, pair) cell
  int max_day = 60;
  double timex_probability = 0.5;
  double doc_date_probability = 0.9;
};

// Random corpus over a handful of predicates and entity pairs with random
// day stamps. Instances may carry zero, one or two timex intervals.
inline std::vector<RelationInstance> RandomMicroCorpus(std::mt19937_64 &rng,
                                                       const MicroLimits &lim = {}) {
  auto below = [&](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };
  auto chance = [&](double p) { return (rng() >> 11) * 0x1.0p-53 < p; };
  int np = 1 + below(lim.max_predicates);
  int ne = 1 + below(lim.max_pairs);
  std::vector<RelationInstance> out;
  for (int p = 0; p < np; ++p) {
    for (int e = 0; e < ne; ++e) {
      if (!chance(0.7)) continue;
      int n = 1 + below(lim.max_instances);
      for (int i = 0; i < n; ++i) {
        std::vector<TimeInterval> tx;
        if (chance(lim.timex_probability)) {
          int k = chance(0.2) ? 2 : 1;
          for (int j = 0; j < k; ++j) {
            Day s = below(lim.max_day + 1);
            tx.push_back({s, s + (chance(0.3) ? below(4) : 0)});
          }
        }
        std::optional<Day> doc;
        if (chance(lim.doc_date_probability)) doc = below(lim.max_day + 1);
        out.push_back(Instance("p" + std::to_string(p), "e" + std::to_string(e),
                               "x" + std::to_string(e % 2), doc, tx));
      }
    }
  }
  if (out.empty()) out.push_back(Instance("p0", "e0", "x0", 0));
  return out;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("tempograph_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string File(const std::string &name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace tempograph::testing

#endif  // TEMPOGRAPH_TESTS_TEST_UTIL_H_
