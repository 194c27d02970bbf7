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

#include "tempograph/time_interval.h"

#include "tempograph/errors.h"

namespace tempograph {

std::string_view TimeSourceName(TimeSource source) {
  switch (source) {
    case TimeSource::kTimexOnly:
      return "timex";
    case TimeSource::kDocDateOnly:
      return "docdate";
    case TimeSource::kTimexAndDocDate:
      return "both";
  }
  return "?";
}

TimeSource ParseTimeSource(std::string_view name) {
  if (name == "timex" || name == "timexOnly") return TimeSource::kTimexOnly;
  if (name == "docdate" || name == "docDateOnly") return TimeSource::kDocDateOnly;
  if (name == "both" || name == "timexAndDocDate") return TimeSource::kTimexAndDocDate;
  throw UsageError("unknown time source '" + std::string(name) +
                   "' (expected timex, docdate or both)");
}

std::string_view WindowModeName(WindowMode mode) {
  return mode == WindowMode::kBoth ? "both" : "single";
}

WindowMode ParseWindowMode(std::string_view name) {
  if (name == "both") return WindowMode::kBoth;
  if (name == "single") return WindowMode::kSingle;
  throw UsageError("unknown window mode '" + std::string(name) +
                   "' (expected both or single)");
}

std::vector<TimeInterval> ResolveIntervals(const RelationInstance &inst,
                                           TimeSource source) {
  auto doc_interval = [&]() -> std::vector<TimeInterval> {
    if (!inst.doc_date) return {};
    return {TimeInterval{*inst.doc_date, *inst.doc_date}};
  };
  switch (source) {
    case TimeSource::kTimexOnly:
      return inst.timex_intervals;
    case TimeSource::kDocDateOnly:
      return doc_interval();
    case TimeSource::kTimexAndDocDate:
      if (!inst.timex_intervals.empty()) return inst.timex_intervals;
      return doc_interval();
  }
  return {};
}

TimeInterval Extend(TimeInterval iv, int64_t days) {
  return {iv.start - days, iv.end + days};
}

bool Overlaps(TimeInterval a, TimeInterval b, const Window &window) {
  TimeInterval ea = Extend(a, window.first_extension());
  TimeInterval eb = Extend(b, window.second_extension());
  return ea.start <= eb.end && eb.start <= ea.end;
}

}  // namespace tempograph
