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

#ifndef DATESYNTH_EXTRACTION_H_
#define DATESYNTH_EXTRACTION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datesynth/bank.h"
#include "datesynth/calendar.h"
#include "datesynth/document.h"
#include "datesynth/regex.h"

namespace datesynth {

struct Detection {
  std::string page_id;
  Span span;  // offsets into the preprocessed text
  std::string matched_text;
  std::optional<DateParts> parts;
  std::optional<TimestampRange> range;
  int bank_entry = 0;

  bool operator==(const Detection&) const = default;
};

// A validated bank with its patterns compiled, ordered by priority.
// Immutable, so one instance can serve concurrent scans.
class CompiledBank {
 public:
  // Throws std::invalid_argument (see RegexBank::Validate).
  explicit CompiledBank(RegexBank bank);

  const RegexBank& bank() const { return bank_; }
  Provenance provenance() const { return bank_.provenance; }
  std::size_t size() const { return regexes_.size(); }
  const RegexEntry& entry(std::size_t i) const { return bank_.entries[i]; }
  const Regex& regex(std::size_t i) const { return regexes_[i]; }

 private:
  RegexBank bank_;
  std::vector<Regex> regexes_;
};

struct ScanStats {
  std::size_t accepted = 0;
  // Matches dropped by calendar or range validation.
  std::size_t rejected = 0;
  // Matches whose map did not fit: a defect in the bank, not the text.
  std::size_t decomposition_errors = 0;

  ScanStats& operator+=(const ScanStats& other);
};

// Leftmost-longest scan over all entries; ties go to the lower priority.
// A match must not be glued to neighbouring text: it cannot split a run of
// letters and digits, and cannot touch a separator that continues into one, so
// the tail "02/2001" of a rejected "31/02/2001" is not reported. Rejected
// matches resume one character later; accepted ones resume at their end.
std::vector<Detection> scan(std::string_view text, const CompiledBank& bank,
                            std::string_view page_id = {},
                            ScanStats* stats = nullptr);

struct MultilineCandidate {
  std::string text;
  // Offsets of the contributing lines in the newline-joined input.
  std::vector<Span> sources;

  bool operator==(const MultilineCandidate&) const = default;
};

// Vertical dates: a lone day line (optional), a lone month line and a lone
// year line, joined with '/'.
std::vector<MultilineCandidate> assemble_multiline(
    const std::vector<std::string>& lines);

// Scans the page text, then its multiline candidates. A candidate counts
// only when one detection covers all of it and it overlaps nothing found
// on a single line; its span runs from the first to the last source line.
std::vector<Detection> scan_page(const Page& page, const CompiledBank& bank,
                                 ScanStats* stats = nullptr);

// The four widely circulated patterns. None has an extraction map.
RegexBank builtin_community_bank();

// Hand-written patterns with maps for numeric, month-name, long ordinal and
// range forms.
RegexBank builtin_bespoke_bank();

}  // namespace datesynth

#endif  // DATESYNTH_EXTRACTION_H_
