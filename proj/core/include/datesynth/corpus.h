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

// Positive-example generation: every midnight in a window is rendered into
// each textual shape a date can take on a page, together with the parts
// and interval it denotes.

#ifndef DATESYNTH_CORPUS_H_
#define DATESYNTH_CORPUS_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datesynth/calendar.h"
#include "datesynth/document.h"
#include "datesynth/extraction_map.h"
#include "datesynth/token.h"

namespace datesynth {

enum class Family {
  kNumericShort,      // 01/02/2001, 5/2006
  kMonthnameDayless,  // Jan 2010, Febr 20, 3-Apr-98
  kLongformOrdinal,   // 11th of June, 96
  kDayRange,          // 01-02/01/1990, 1 - 3.4.98
};

inline constexpr std::array<Family, 4> kAllFamilies = {
    Family::kNumericShort, Family::kMonthnameDayless,
    Family::kLongformOrdinal, Family::kDayRange};

std::string_view ToString(Family family);
std::optional<Family> ParseFamily(std::string_view text);

// One token column of a family's surface shape. Columns sharing an
// optional group are present or absent together.
struct ColumnSpec {
  TokenKind kind = TokenKind::kPunct;
  int optional_group = -1;
};

struct FamilySchema {
  Family family;
  // Shape of the preprocessed rendering.
  std::vector<ColumnSpec> columns;
  ExtractionMap extraction_map;
};

const FamilySchema& schema_for(Family family);

using ColumnValues = std::vector<std::optional<std::string>>;

// Assigns each token to a schema column, leaving optional columns empty
// where the tokens skip them. Prefers the assignment with the most columns
// present. nullopt when the tokens do not fit the schema.
std::optional<ColumnValues> align_columns(const FamilySchema& schema,
                                          const std::vector<Token>& tokens);

struct PartSpan {
  PartKind kind = PartKind::kDay;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  bool operator==(const PartSpan&) const = default;
};

struct RenderedExample {
  std::string text;
  DateParts parts;
  TimestampRange range;
  Family family = Family::kNumericShort;
  std::vector<PartSpan> part_spans;

  bool operator==(const RenderedExample&) const = default;
};

struct GenerationConfig {
  CivilDate start_date{1900, 1, 1};
  CivilDate end_date{2100, 12, 31};
  std::string short_separators = "-./";
  std::string long_separators = " -./";
  // Emit both the natural and the zero-padded spelling of values below 10.
  bool zero_padding = true;
  std::vector<int> year_digits = {2, 4};
  bool range_tight = true;
  bool range_spaced = true;
  bool deterministic_order = true;
  std::vector<Family> families = {kAllFamilies.begin(), kAllFamilies.end()};

  // Throws std::invalid_argument.
  void Validate() const;
};

std::vector<CivilDate> enumerate_days(const CivilDate& start,
                                      const CivilDate& end);

std::vector<RenderedExample> render_numeric_variants(
    const CivilDate& date, const GenerationConfig& cfg);

// Month-year spellings of the numeric family ("5/2006").
std::vector<RenderedExample> render_numeric_dayless_variants(
    int month, int year, const GenerationConfig& cfg);

std::vector<RenderedExample> render_monthname_variants(
    const CivilDate& date, bool dayless, const GenerationConfig& cfg);

std::vector<RenderedExample> render_longform_variants(const CivilDate& date);

// Every pair of days a < b of the month, optionally restricted to
// [first_day, last_day].
std::vector<RenderedExample> render_day_range_variants(
    int month, int year, const GenerationConfig& cfg, int first_day = 1,
    int last_day = 31);

struct FamilyCorpus {
  Family family = Family::kNumericShort;
  ExtractionMap extraction_map;
  std::vector<RenderedExample> examples;
};

struct Corpus {
  std::vector<FamilyCorpus> families;

  std::size_t size() const;
  bool empty() const { return size() == 0; }
};

// Streams the corpus in canonical order (family, then month, then day,
// then variant) without materialising it.
void for_each_example(const GenerationConfig& cfg,
                      const std::function<void(const RenderedExample&)>& visit);

Corpus build_training_corpus(const GenerationConfig& cfg);

// Decomposes the (preprocessed) text with the family map and checks that
// it yields exactly the ground-truth parts and range.
bool round_trips(const RenderedExample& example);

struct EvaluationCorpus {
  std::vector<Page> pages;
  std::vector<Annotation> annotations;
};

// Fixed date-lookalikes mixed into every noise corpus. None of them denote
// a valid date.
const std::vector<std::string>& distractor_strings();

// Filler vocabulary. No word reads as a month name.
const std::vector<std::string>& filler_words();

// Interleaves corpus examples with seeded filler words and distractors into
// pages. Labels cover the example spans only.
EvaluationCorpus inject_noise(const Corpus& corpus, std::uint64_t seed,
                              std::size_t examples_per_page = 6);

}  // namespace datesynth

#endif  // DATESYNTH_CORPUS_H_
