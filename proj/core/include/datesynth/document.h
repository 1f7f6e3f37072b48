// Copyright 2026 The Datesynth Authors.
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

#ifndef DATESYNTH_DOCUMENT_H_
#define DATESYNTH_DOCUMENT_H_

#include <cstddef>
#include <optional>
#include <string>

#include "datesynth/calendar.h"

namespace datesynth {

// Half-open byte offsets.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool Overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  bool operator==(const Span&) const = default;
};

struct Page {
  std::string document_id;
  std::string page_id;
  std::string raw_text;
  std::string preprocessed_text;
};

// A ground-truth date. Month and year are always present.
struct Annotation {
  std::string page_id;
  std::optional<Span> span;
  DateParts parts;
  Seconds start = 0;
  Seconds end = 0;

  TimestampRange range() const { return {start, end}; }
};

}  // namespace datesynth

#endif  // DATESYNTH_DOCUMENT_H_
