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

#include "tempograph/relation.h"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "json.hpp"
#include "tempograph/errors.h"

namespace tempograph {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool ParseInt(std::string_view s, int &out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

const std::string &RequireString(const json &obj, const char *field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw DataError(std::string("missing field '") + field + "'");
  if (!it->is_string()) {
    throw DataError(std::string("field '") + field + "' is not a string");
  }
  return it->get_ref<const std::string &>();
}

Day RequireDate(const json &value, const char *what) {
  if (!value.is_string()) throw DataError(std::string(what) + " is not a date string");
  const auto &s = value.get_ref<const std::string &>();
  auto day = ParseIsoDate(s);
  if (!day) throw DataError(std::string(what) + " '" + s + "' is not a YYYY-MM-DD date");
  return *day;
}

bool HasSeparator(const std::string &s) {
  return s.find_first_of("\t\n\r") != std::string::npos;
}

}  // namespace

std::optional<Day> ParseIsoDate(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y, m, d;
  if (!ParseInt(text.substr(0, 4), y) || !ParseInt(text.substr(5, 2), m) ||
      !ParseInt(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  std::chrono::year_month_day ymd{std::chrono::year{y},
                                  std::chrono::month{static_cast<unsigned>(m)},
                                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return std::chrono::sys_days{ymd}.time_since_epoch().count();
}

std::string FormatIsoDate(Day day) {
  std::chrono::year_month_day ymd{
      std::chrono::sys_days{std::chrono::days{day}}};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

Corpus::Corpus(std::vector<RelationInstance> instances)
    : instances_(std::move(instances)) {
  std::set<PredicateId> preds;
  std::set<EntityPairId> pairs;
  for (const auto &inst : instances_) {
    preds.insert(inst.predicate);
    pairs.insert(inst.entity_pair);
  }
  predicates_.assign(preds.begin(), preds.end());
  pairs_.assign(pairs.begin(), pairs.end());

  // (pair, predicate, instance) triples sorted into cells.
  struct Key {
    PairIndex pair;
    PredicateIndex predicate;
    uint32_t instance;
  };
  std::vector<Key> keys;
  keys.reserve(instances_.size());
  for (uint32_t i = 0; i < instances_.size(); ++i) {
    keys.push_back({*FindPair(instances_[i].entity_pair),
                    *FindPredicate(instances_[i].predicate), i});
  }
  std::sort(keys.begin(), keys.end(), [](const Key &a, const Key &b) {
    if (a.pair != b.pair) return a.pair < b.pair;
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    return a.instance < b.instance;
  });

  predicate_counts_.assign(predicates_.size(), 0);
  pair_counts_.assign(pairs_.size(), 0);
  pair_offsets_.assign(pairs_.size() + 1, 0);
  cells_by_predicate_.assign(predicates_.size(), {});
  for (const auto &k : keys) {
    if (cells_.empty() || cells_.back().pair != k.pair ||
        cells_.back().predicate != k.predicate) {
      cells_.push_back({k.predicate, k.pair, {}});
    }
    cells_.back().instances.push_back(k.instance);
    ++predicate_counts_[k.predicate];
    ++pair_counts_[k.pair];
  }
  size_t next = 0;
  for (PairIndex ep = 0; ep < pairs_.size(); ++ep) {
    pair_offsets_[ep] = static_cast<uint32_t>(next);
    while (next < cells_.size() && cells_[next].pair == ep) ++next;
  }
  pair_offsets_[pairs_.size()] = static_cast<uint32_t>(cells_.size());
  // Walking cells in (pair, predicate) order leaves each predicate's list
  // sorted by pair.
  for (uint32_t c = 0; c < cells_.size(); ++c) {
    cells_by_predicate_[cells_[c].predicate].push_back(c);
  }
}

std::optional<PredicateIndex> Corpus::FindPredicate(const PredicateId &id) const {
  auto it = std::lower_bound(predicates_.begin(), predicates_.end(), id);
  if (it == predicates_.end() || *it != id) return std::nullopt;
  return static_cast<PredicateIndex>(it - predicates_.begin());
}

std::optional<PairIndex> Corpus::FindPair(const EntityPairId &id) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), id);
  if (it == pairs_.end() || *it != id) return std::nullopt;
  return static_cast<PairIndex>(it - pairs_.begin());
}

std::span<const Corpus::Cell> Corpus::CellsForPair(PairIndex ep) const {
  return std::span<const Cell>(cells_).subspan(
      pair_offsets_[ep], pair_offsets_[ep + 1] - pair_offsets_[ep]);
}

int64_t Corpus::Count(PredicateIndex p, PairIndex ep) const {
  auto cells = CellsForPair(ep);
  auto it = std::lower_bound(
      cells.begin(), cells.end(), p,
      [](const Cell &c, PredicateIndex v) { return c.predicate < v; });
  if (it == cells.end() || it->predicate != p) return 0;
  return static_cast<int64_t>(it->instances.size());
}

std::vector<std::string> Corpus::TypePairs() const {
  std::set<std::string> labels;
  for (const auto &p : predicates_) labels.insert(p.TypePair());
  return {labels.begin(), labels.end()};
}

RelationInstance ParseRecord(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error &e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw DataError("record is not a JSON object");

  RelationInstance inst;
  inst.predicate.name = RequireString(obj, "pred");
  inst.predicate.type1 = RequireString(obj, "type1");
  inst.predicate.type2 = RequireString(obj, "type2");
  inst.entity_pair.arg1 = RequireString(obj, "arg1");
  inst.entity_pair.arg2 = RequireString(obj, "arg2");
  inst.doc_id = RequireString(obj, "doc_id");
  if (inst.predicate.name.empty() || inst.predicate.type1.empty() ||
      inst.predicate.type2.empty()) {
    throw DataError("empty predicate or type");
  }
  if (inst.entity_pair.arg1.empty() || inst.entity_pair.arg2.empty()) {
    throw DataError("empty argument");
  }
  if (HasSeparator(inst.predicate.name) || HasSeparator(inst.predicate.type1) ||
      HasSeparator(inst.predicate.type2) || HasSeparator(inst.entity_pair.arg1) ||
      HasSeparator(inst.entity_pair.arg2)) {
    throw DataError("tab or newline inside a name");
  }

  if (auto it = obj.find("timexes"); it != obj.end() && !it->is_null()) {
    if (!it->is_array()) throw DataError("'timexes' is not a list");
    for (const auto &t : *it) {
      if (!t.is_object() || !t.contains("start") || !t.contains("end")) {
        throw DataError("timex entry needs 'start' and 'end'");
      }
      TimeInterval iv{RequireDate(t["start"], "timex start"),
                      RequireDate(t["end"], "timex end")};
      if (iv.start > iv.end) throw DataError("timex start after end");
      inst.timex_intervals.push_back(iv);
    }
  }
  if (auto it = obj.find("doc_date"); it != obj.end() && !it->is_null()) {
    inst.doc_date = RequireDate(*it, "doc_date");
  }
  return inst;
}

std::string FormatRecord(const RelationInstance &inst) {
  ordered_json obj;
  obj["pred"] = inst.predicate.name;
  obj["type1"] = inst.predicate.type1;
  obj["type2"] = inst.predicate.type2;
  obj["arg1"] = inst.entity_pair.arg1;
  obj["arg2"] = inst.entity_pair.arg2;
  obj["timexes"] = ordered_json::array();
  for (const auto &iv : inst.timex_intervals) {
    obj["timexes"].push_back(
        {{"start", FormatIsoDate(iv.start)}, {"end", FormatIsoDate(iv.end)}});
  }
  obj["doc_date"] =
      inst.doc_date ? ordered_json(FormatIsoDate(*inst.doc_date)) : ordered_json(nullptr);
  obj["doc_id"] = inst.doc_id;
  return obj.dump();
}

LoadResult LoadCorpus(std::istream &in, const LoadOptions &options) {
  LoadResult result;
  std::vector<RelationInstance> kept;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    RelationInstance inst;
    try {
      inst = ParseRecord(line);
    } catch (const DataError &e) {
      std::string msg = "line " + std::to_string(line_no) + ": " + e.what();
      if (options.strict) throw DataError(msg);
      result.warnings.push_back(std::move(msg));
      continue;
    }
    if (options.type_filter && inst.predicate.TypePair() != *options.type_filter) {
      ++result.filtered_out;
      continue;
    }
    kept.push_back(std::move(inst));
  }
  result.corpus = Corpus(std::move(kept));
  return result;
}

LoadResult LoadCorpusFile(const std::string &path, const LoadOptions &options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file '" + path + "'");
  return LoadCorpus(in, options);
}

void WriteRecords(std::ostream &out, std::span<const RelationInstance> records) {
  for (const auto &r : records) out << FormatRecord(r) << '\n';
}

CorpusStats ComputeStats(const Corpus &corpus) {
  CorpusStats s;
  s.num_instances = corpus.size();
  s.num_predicates = corpus.num_predicates();
  s.num_pairs = corpus.num_pairs();
  for (const auto &inst : corpus.instances()) {
    if (!inst.timex_intervals.empty()) ++s.num_timexed;
  }
  if (s.num_instances > 0) {
    s.timex_coverage =
        static_cast<double>(s.num_timexed) / static_cast<double>(s.num_instances);
  }
  return s;
}

}  // namespace tempograph
