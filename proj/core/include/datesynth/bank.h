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

#ifndef DATESYNTH_BANK_H_
#define DATESYNTH_BANK_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datesynth/extraction_map.h"

namespace datesynth {

enum class Provenance { kCommunity, kBespoke, kSynthesized };

std::string_view ToString(Provenance provenance);
std::optional<Provenance> ParseProvenance(std::string_view text);

struct RegexEntry {
  int priority = 0;
  // Portable-dialect source.
  std::string pattern;
  // Empty for entries that only locate dates.
  ExtractionMap extraction_map;
  std::string label;

  bool has_map() const { return !extraction_map.empty(); }
  bool operator==(const RegexEntry&) const = default;
};

struct RegexBank {
  Provenance provenance = Provenance::kSynthesized;
  std::vector<RegexEntry> entries;

  // Throws std::invalid_argument on duplicate priorities or patterns that
  // do not parse.
  void Validate() const;
  bool operator==(const RegexBank&) const = default;
};

}  // namespace datesynth

#endif  // DATESYNTH_BANK_H_
