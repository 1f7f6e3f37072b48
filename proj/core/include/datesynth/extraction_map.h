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

#ifndef DATESYNTH_EXTRACTION_MAP_H_
#define DATESYNTH_EXTRACTION_MAP_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "datesynth/calendar.h"

namespace datesynth {

// Decomposition maps are small register programs. `split` cuts the whole
// match into pieces on any of a set of characters; `index`/`pair` load one
// or two pieces into the register; the transforms rewrite every value held
// in the register; `assign` stores it into a date part.
//
// Indices count from the front when non-negative and from the back when
// negative, so a dayless and a full date share one map: the year is always
// the last piece and the month the penultimate one.
enum class OpKind {
  kSplit,
  kIndex,
  kPair,
  kSplitHyphenRange,
  kStripOrdinal,
  kMonthName,
  kPivotYear,
  kAssign,
};

enum class PartKind { kDay, kMonth, kYear };

const char* ToString(PartKind part);
std::optional<PartKind> ParsePartKind(std::string_view text);

struct DecomposeOp {
  OpKind kind = OpKind::kSplit;
  std::string chars;      // kSplit
  int index = 0;          // kIndex, kPair (first)
  int index2 = 0;         // kPair (second)
  bool optional = false;  // kIndex: a missing piece leaves the part absent
  PartKind part = PartKind::kDay;  // kAssign

  static DecomposeOp Split(std::string chars);
  static DecomposeOp Index(int i, bool optional = false);
  static DecomposeOp Pair(int i, int j);
  static DecomposeOp SplitHyphenRange();
  static DecomposeOp StripOrdinal();
  static DecomposeOp MonthName();
  static DecomposeOp PivotYear();
  static DecomposeOp Assign(PartKind part);

  bool operator==(const DecomposeOp&) const = default;
};

using ExtractionMap = std::vector<DecomposeOp>;

// A map that does not fit the matched text (a referenced piece is missing):
// the bank and its maps disagree.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DecomposeStatus { kOk, kDecompositionError, kSemanticInvalid };

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::kOk;
  DateParts parts;
  std::string message;
};

// Runs the map. Values that cannot denote a date part (an unknown month
// name, a three digit year) are reported as kSemanticInvalid; structural
// mismatches as kDecompositionError. Calendar validity is not checked here.
DecomposeResult try_decompose(std::string_view matched_text,
                              const ExtractionMap& map);

// Throws DecompositionError or DateError(kSemanticInvalid).
DateParts decompose(std::string_view matched_text, const ExtractionMap& map);

// Compact textual form, one op per element, e.g. "split:-./", "index:-3?",
// "pair:0,1", "assign:day".
std::vector<std::string> SerializeMap(const ExtractionMap& map);
ExtractionMap ParseMap(const std::vector<std::string>& ops);

}  // namespace datesynth

#endif  // DATESYNTH_EXTRACTION_MAP_H_
