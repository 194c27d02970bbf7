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

// Time-interval selection and windowed overlap tests.

#ifndef TEMPOGRAPH_TIME_INTERVAL_H_
#define TEMPOGRAPH_TIME_INTERVAL_H_

#include <string>
#include <string_view>
#include <vector>

#include "tempograph/relation.h"

namespace tempograph {

// Where an event's time comes from.
enum class TimeSource {
  kTimexOnly,        // resolved in-text time expressions
  kDocDateOnly,      // document creation date
  kTimexAndDocDate,  // time expressions, backing off to the document date
};

inline constexpr TimeSource kAllTimeSources[] = {
    TimeSource::kTimexOnly, TimeSource::kDocDateOnly, TimeSource::kTimexAndDocDate};

// Short names used on the command line and in output files:
// "timex", "docdate", "both". ParseTimeSource also accepts the long forms
// timexOnly / docDateOnly / timexAndDocDate. Throws UsageError.
std::string_view TimeSourceName(TimeSource source);
TimeSource ParseTimeSource(std::string_view name);

// kBoth extends both intervals by N days before intersecting them, so two
// one-day events overlap iff their gap is at most 2N. kSingle extends only
// one side (gap at most N).
enum class WindowMode { kBoth, kSingle };

std::string_view WindowModeName(WindowMode mode);
WindowMode ParseWindowMode(std::string_view name);

struct Window {
  int64_t days = 0;  // N >= 0; 0 means no window
  WindowMode mode = WindowMode::kBoth;

  // Extension applied to each side of a comparison. Their sum is the
  // largest gap that still counts as overlap.
  int64_t first_extension() const { return days; }
  int64_t second_extension() const { return mode == WindowMode::kBoth ? days : 0; }
};

// The intervals an instance contributes under `source`. Never fails; an
// instance without usable time yields an empty list.
std::vector<TimeInterval> ResolveIntervals(const RelationInstance &inst,
                                           TimeSource source);

// [start - days, end + days]
TimeInterval Extend(TimeInterval iv, int64_t days);

// Closed-interval intersection after windowing; symmetric in a and b.
bool Overlaps(TimeInterval a, TimeInterval b, const Window &window);
inline bool Overlaps(TimeInterval a, TimeInterval b, int64_t days) {
  return Overlaps(a, b, Window{days, WindowMode::kBoth});
}

}  // namespace tempograph

#endif  // TEMPOGRAPH_TIME_INTERVAL_H_
