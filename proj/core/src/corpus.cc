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

#include "datesynth/corpus.h"

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "datesynth/preprocess.h"

namespace datesynth {

namespace {

class Builder {
 public:
  void Add(std::string_view s) { text_ += s; }

  void AddPart(PartKind kind, std::string_view s) {
    const auto begin = static_cast<std::uint32_t>(text_.size());
    text_ += s;
    spans_.push_back({kind, begin, static_cast<std::uint32_t>(text_.size())});
  }

  RenderedExample Finish(Family family, DateParts parts) {
    RenderedExample ex;
    ex.text = std::move(text_);
    ex.range = range_of(parts);
    ex.parts = std::move(parts);
    ex.family = family;
    ex.part_spans = std::move(spans_);
    return ex;
  }

 private:
  std::string text_;
  std::vector<PartSpan> spans_;
};

std::vector<std::string> NumberForms(int value, bool zero_padding) {
  std::vector<std::string> forms{std::to_string(value)};
  if (zero_padding && value < 10) forms.push_back("0" + std::to_string(value));
  return forms;
}

// Two digit spellings only where the pivot reads them back to |year|.
std::vector<std::string> YearForms(int year, const GenerationConfig& cfg) {
  std::vector<std::string> forms;
  for (int digits : cfg.year_digits) {
    char buf[8];
    if (digits == 4) {
      std::snprintf(buf, sizeof(buf), "%04d", year);
      forms.emplace_back(buf);
    } else if (digits == 2) {
      const int yy = year % 100;
      if (resolve_two_digit_year(yy) != year) continue;
      std::snprintf(buf, sizeof(buf), "%02d", yy);
      forms.emplace_back(buf);
    }
  }
  return forms;
}

std::vector<std::string> MonthPrefixes(int month) {
  const std::string_view name = month_full_name(month);
  std::vector<std::string> out;
  for (std::size_t len = 3; len <= name.size(); ++len) {
    out.emplace_back(name.substr(0, len));
  }
  return out;
}

ColumnSpec Col(TokenKind kind, int group = -1) { return {kind, group}; }

std::vector<FamilySchema> BuildSchemas() {
  using K = TokenKind;
  using Op = DecomposeOp;
  std::vector<FamilySchema> out;
  out.push_back(
      {Family::kNumericShort,
       {Col(K::kDigits, 0), Col(K::kPunct, 0), Col(K::kDigits),
        Col(K::kPunct), Col(K::kDigits)},
       {Op::Split("-./"), Op::Index(-3, true), Op::Assign(PartKind::kDay),
        Op::Index(-2), Op::Assign(PartKind::kMonth), Op::Index(-1),
        Op::PivotYear(), Op::Assign(PartKind::kYear)}});
  out.push_back(
      {Family::kMonthnameDayless,
       {Col(K::kDigits, 0), Col(K::kPunct, 0), Col(K::kAlpha), Col(K::kPunct),
        Col(K::kDigits)},
       {Op::Split(" -./"), Op::Index(-3, true), Op::Assign(PartKind::kDay),
        Op::Index(-2), Op::MonthName(), Op::Assign(PartKind::kMonth),
        Op::Index(-1), Op::PivotYear(), Op::Assign(PartKind::kYear)}});
  out.push_back(
      {Family::kLongformOrdinal,
       {Col(K::kDigits), Col(K::kAlpha), Col(K::kPunct), Col(K::kAlpha),
        Col(K::kPunct), Col(K::kPunct), Col(K::kDigits)},
       {Op::Split(" ,"), Op::Index(0), Op::StripOrdinal(),
        Op::Assign(PartKind::kDay), Op::Index(-2), Op::MonthName(),
        Op::Assign(PartKind::kMonth), Op::Index(-1), Op::PivotYear(),
        Op::Assign(PartKind::kYear)}});
  out.push_back(
      {Family::kDayRange,
       {Col(K::kDigits), Col(K::kPunct, 0), Col(K::kPunct), Col(K::kPunct, 1),
        Col(K::kDigits), Col(K::kPunct), Col(K::kDigits), Col(K::kPunct),
        Col(K::kDigits)},
       {Op::Split(" -./"), Op::Pair(0, 1), Op::Assign(PartKind::kDay),
        Op::Index(-2), Op::Assign(PartKind::kMonth), Op::Index(-1),
        Op::PivotYear(), Op::Assign(PartKind::kYear)}});
  return out;
}

bool Wants(const GenerationConfig& cfg, Family family) {
  return std::find(cfg.families.begin(), cfg.families.end(), family) !=
         cfg.families.end();
}

// Months intersecting [start, end], with the covered day bounds.
struct MonthSlice {
  int year;
  int month;
  int first_day;
  int last_day;
};

std::vector<MonthSlice> MonthsOf(const CivilDate& start, const CivilDate& end) {
  std::vector<MonthSlice> out;
  int y = start.year;
  int m = start.month;
  while (y < end.year || (y == end.year && m <= end.month)) {
    const int first = (y == start.year && m == start.month) ? start.day : 1;
    const int last = (y == end.year && m == end.month) ? end.day
                                                       : days_in_month(m, y);
    out.push_back({y, m, first, last});
    if (++m > 12) {
      m = 1;
      ++y;
    }
  }
  return out;
}

std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

std::string_view ToString(Family family) {
  switch (family) {
    case Family::kNumericShort:
      return "numeric-short";
    case Family::kMonthnameDayless:
      return "monthname-dayless";
    case Family::kLongformOrdinal:
      return "longform-ordinal";
    case Family::kDayRange:
      return "day-range";
  }
  return "numeric-short";
}

std::optional<Family> ParseFamily(std::string_view text) {
  for (Family f : kAllFamilies) {
    if (ToString(f) == text) return f;
  }
  return std::nullopt;
}

const FamilySchema& schema_for(Family family) {
  static const std::vector<FamilySchema> schemas = BuildSchemas();
  for (const auto& s : schemas) {
    if (s.family == family) return s;
  }
  throw std::invalid_argument("unknown family");
}

std::optional<ColumnValues> align_columns(const FamilySchema& schema,
                                          const std::vector<Token>& tokens) {
  std::vector<int> groups;
  for (const auto& c : schema.columns) {
    if (c.optional_group >= 0 &&
        std::find(groups.begin(), groups.end(), c.optional_group) ==
            groups.end()) {
      groups.push_back(c.optional_group);
    }
  }
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << groups.size()); ++mask) {
    masks.push_back(mask);
  }
  auto present_count = [&](unsigned mask) {
    std::size_t n = 0;
    for (const auto& c : schema.columns) {
      if (c.optional_group < 0) {
        ++n;
        continue;
      }
      const auto g = std::find(groups.begin(), groups.end(), c.optional_group) -
                     groups.begin();
      if (mask & (1u << g)) ++n;
    }
    return n;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
    return present_count(a) > present_count(b);
  });
  for (unsigned mask : masks) {
    if (present_count(mask) != tokens.size()) continue;
    ColumnValues values(schema.columns.size());
    std::size_t t = 0;
    bool ok = true;
    for (std::size_t c = 0; c < schema.columns.size() && ok; ++c) {
      const ColumnSpec& spec = schema.columns[c];
      if (spec.optional_group >= 0) {
        const auto g =
            std::find(groups.begin(), groups.end(), spec.optional_group) -
            groups.begin();
        if (!(mask & (1u << g))) continue;
      }
      if (tokens[t].kind != spec.kind) {
        ok = false;
        break;
      }
      values[c] = tokens[t].text;
      ++t;
    }
    if (ok) return values;
  }
  return std::nullopt;
}

void GenerationConfig::Validate() const {
  if (!is_valid(start_date) || !is_valid(end_date)) {
    throw std::invalid_argument("generation bounds must be valid dates in " +
                                std::to_string(kMinYear) + ".." +
                                std::to_string(kMaxYear));
  }
  if (end_date < start_date) {
    throw std::invalid_argument("generation bounds are inverted: " +
                                to_iso(start_date) + " > " + to_iso(end_date));
  }
  if (short_separators.empty() || long_separators.empty()) {
    throw std::invalid_argument("separator sets must be nonempty");
  }
  if (year_digits.empty()) throw std::invalid_argument("no year widths");
  for (int d : year_digits) {
    if (d != 2 && d != 4) throw std::invalid_argument("year widths are 2 or 4");
  }
  if (!range_tight && !range_spaced) {
    throw std::invalid_argument("no range hyphen spacing selected");
  }
}

std::vector<CivilDate> enumerate_days(const CivilDate& start,
                                      const CivilDate& end) {
  if (!is_valid(start) || !is_valid(end)) {
    throw std::invalid_argument("enumerate_days: invalid bound");
  }
  if (end < start) throw std::invalid_argument("enumerate_days: inverted bounds");
  std::vector<CivilDate> out;
  const Seconds last = civil_to_epoch_midnight(end);
  for (Seconds t = civil_to_epoch_midnight(start); t <= last;
       t += kSecondsPerDay) {
    out.push_back(epoch_to_civil(t));
  }
  return out;
}

std::vector<RenderedExample> render_numeric_variants(
    const CivilDate& date, const GenerationConfig& cfg) {
  std::vector<RenderedExample> out;
  const auto days = NumberForms(date.day, cfg.zero_padding);
  const auto months = NumberForms(date.month, cfg.zero_padding);
  const auto years = YearForms(date.year, cfg);
  for (char sep : cfg.short_separators) {
    const std::string s(1, sep);
    for (const auto& d : days) {
      for (const auto& m : months) {
        for (const auto& y : years) {
          Builder b;
          b.AddPart(PartKind::kDay, d);
          b.Add(s);
          b.AddPart(PartKind::kMonth, m);
          b.Add(s);
          b.AddPart(PartKind::kYear, y);
          DateParts parts;
          parts.day = date.day;
          parts.month = date.month;
          parts.year = date.year;
          out.push_back(b.Finish(Family::kNumericShort, std::move(parts)));
        }
      }
    }
  }
  return out;
}

std::vector<RenderedExample> render_numeric_dayless_variants(
    int month, int year, const GenerationConfig& cfg) {
  std::vector<RenderedExample> out;
  const auto months = NumberForms(month, cfg.zero_padding);
  const auto years = YearForms(year, cfg);
  for (char sep : cfg.short_separators) {
    for (const auto& m : months) {
      for (const auto& y : years) {
        Builder b;
        b.AddPart(PartKind::kMonth, m);
        b.Add(std::string(1, sep));
        b.AddPart(PartKind::kYear, y);
        DateParts parts;
        parts.month = month;
        parts.year = year;
        out.push_back(b.Finish(Family::kNumericShort, std::move(parts)));
      }
    }
  }
  return out;
}

std::vector<RenderedExample> render_monthname_variants(
    const CivilDate& date, bool dayless, const GenerationConfig& cfg) {
  std::vector<RenderedExample> out;
  const auto names = MonthPrefixes(date.month);
  const auto years = YearForms(date.year, cfg);
  const std::vector<std::string> days =
      dayless ? std::vector<std::string>{""}
              : NumberForms(date.day, cfg.zero_padding);
  for (char sep : cfg.long_separators) {
    const std::string s(1, sep);
    for (const auto& d : days) {
      for (const auto& name : names) {
        for (const auto& y : years) {
          Builder b;
          if (!dayless) {
            b.AddPart(PartKind::kDay, d);
            b.Add(s);
          }
          b.AddPart(PartKind::kMonth, name);
          b.Add(s);
          b.AddPart(PartKind::kYear, y);
          DateParts parts;
          if (!dayless) parts.day = date.day;
          parts.month = date.month;
          parts.year = date.year;
          out.push_back(b.Finish(Family::kMonthnameDayless, std::move(parts)));
        }
      }
    }
  }
  return out;
}

std::vector<RenderedExample> render_longform_variants(const CivilDate& date) {
  std::vector<RenderedExample> out;
  GenerationConfig widths;
  const auto years = YearForms(date.year, widths);
  const std::string day = std::to_string(date.day);
  const std::string suffix(ordinal_suffix_for(date.day));
  for (const auto& name : MonthPrefixes(date.month)) {
    for (const auto& y : years) {
      Builder b;
      b.AddPart(PartKind::kDay, day);
      b.Add(suffix);
      b.Add(" of ");
      b.AddPart(PartKind::kMonth, name);
      b.Add(", ");
      b.AddPart(PartKind::kYear, y);
      DateParts parts;
      parts.day = date.day;
      parts.month = date.month;
      parts.year = date.year;
      parts.ordinal_suffix = suffix;
      out.push_back(b.Finish(Family::kLongformOrdinal, std::move(parts)));
    }
  }
  return out;
}

std::vector<RenderedExample> render_day_range_variants(
    int month, int year, const GenerationConfig& cfg, int first_day,
    int last_day) {
  std::vector<RenderedExample> out;
  const int dim = days_in_month(month, year);
  first_day = std::max(first_day, 1);
  last_day = std::min(last_day, dim);
  const auto months = NumberForms(month, cfg.zero_padding);
  const auto years = YearForms(year, cfg);
  std::vector<std::string> hyphens;
  if (cfg.range_tight) hyphens.emplace_back("-");
  if (cfg.range_spaced) hyphens.emplace_back(" - ");
  for (int a = first_day; a <= last_day; ++a) {
    for (int b = a + 1; b <= last_day; ++b) {
      const auto from = NumberForms(a, cfg.zero_padding);
      const auto to = NumberForms(b, cfg.zero_padding);
      for (const auto& hyphen : hyphens) {
        for (char sep : cfg.short_separators) {
          const std::string s(1, sep);
          for (const auto& fa : from) {
            for (const auto& fb : to) {
              for (const auto& m : months) {
                for (const auto& y : years) {
                  Builder bld;
                  bld.AddPart(PartKind::kDay, fa);
                  bld.Add(hyphen);
                  bld.AddPart(PartKind::kDay, fb);
                  bld.Add(s);
                  bld.AddPart(PartKind::kMonth, m);
                  bld.Add(s);
                  bld.AddPart(PartKind::kYear, y);
                  DateParts parts;
                  parts.day = PartRange(a, b);
                  parts.month = month;
                  parts.year = year;
                  out.push_back(bld.Finish(Family::kDayRange, std::move(parts)));
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

std::size_t Corpus::size() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.examples.size();
  return n;
}

void for_each_example(
    const GenerationConfig& cfg,
    const std::function<void(const RenderedExample&)>& visit) {
  cfg.Validate();
  const auto months = MonthsOf(cfg.start_date, cfg.end_date);
  auto emit = [&](const std::vector<RenderedExample>& batch) {
    for (const auto& ex : batch) visit(ex);
  };
  for (Family family : kAllFamilies) {
    if (!Wants(cfg, family)) continue;
    for (const MonthSlice& ms : months) {
      switch (family) {
        case Family::kNumericShort:
          for (int d = ms.first_day; d <= ms.last_day; ++d) {
            emit(render_numeric_variants({ms.year, ms.month, d}, cfg));
          }
          emit(render_numeric_dayless_variants(ms.month, ms.year, cfg));
          break;
        case Family::kMonthnameDayless:
          for (int d = ms.first_day; d <= ms.last_day; ++d) {
            emit(render_monthname_variants({ms.year, ms.month, d}, false, cfg));
          }
          emit(render_monthname_variants({ms.year, ms.month, 1}, true, cfg));
          break;
        case Family::kLongformOrdinal:
          for (int d = ms.first_day; d <= ms.last_day; ++d) {
            emit(render_longform_variants({ms.year, ms.month, d}));
          }
          break;
        case Family::kDayRange:
          emit(render_day_range_variants(ms.month, ms.year, cfg, ms.first_day,
                                         ms.last_day));
          break;
      }
    }
  }
}

Corpus build_training_corpus(const GenerationConfig& cfg) {
  Corpus corpus;
  for (Family family : kAllFamilies) {
    if (!Wants(cfg, family)) continue;
    corpus.families.push_back({family, schema_for(family).extraction_map, {}});
  }
  for_each_example(cfg, [&](const RenderedExample& ex) {
    for (auto& f : corpus.families) {
      if (f.family == ex.family) {
        f.examples.push_back(ex);
        return;
      }
    }
  });
  return corpus;
}

bool round_trips(const RenderedExample& example) {
  const ExtractionMap& map = schema_for(example.family).extraction_map;
  for (const std::string& text : {example.text, preprocess_text(example.text)}) {
    const DecomposeResult r = try_decompose(text, map);
    if (r.status != DecomposeStatus::kOk || !(r.parts == example.parts)) {
      return false;
    }
    const auto range = try_range_of(r.parts);
    if (!range || !(*range == example.range)) return false;
  }
  return true;
}

const std::vector<std::string>& distractor_strings() {
  static const std::vector<std::string> kDistractors = {
      "99/99/9999",   "31/02/2001", "123/456/78910", "01234/567890",
      "30/02/1999",   "29/02/2001", "00/00/0000",    "32/13/2020",
      "07700 900123", "0161-496-0958"};
  return kDistractors;
}

const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> kWords = {
      "patient",  "reviewed", "clinic",    "letter",  "dose",     "ward",
      "notes",    "follow",   "up",        "referral", "seen",    "by",
      "Dr",       "Smith",    "discharge", "summary", "plan",     "tablets",
      "daily",    "result",   "normal",    "blood",   "pressure", "Ref",
      "No",       "Tel",      "Room",      "x3",      "250mg",    "bd",
      "stable",   "pain",     "review",    "booked",  "GP",       "urgent",
      "routine",  "scan",     "report",    "signed",  "copy",     "DOB"};
  return kWords;
}

EvaluationCorpus inject_noise(const Corpus& corpus, std::uint64_t seed,
                              std::size_t examples_per_page) {
  if (corpus.empty()) throw std::invalid_argument("inject_noise: empty corpus");
  if (examples_per_page == 0) examples_per_page = 1;
  std::mt19937_64 rng(seed);
  const auto& words = filler_words();
  const auto& distractors = distractor_strings();

  std::vector<const RenderedExample*> flat;
  for (const auto& f : corpus.families) {
    for (const auto& ex : f.examples) flat.push_back(&ex);
  }

  EvaluationCorpus out;
  std::size_t page_index = 0;
  for (std::size_t i = 0; i < flat.size(); i += examples_per_page) {
    char id[32];
    std::snprintf(id, sizeof(id), "page-%06zu", page_index);
    Page page;
    page.document_id = "synthetic";
    page.page_id = id;
    std::string& text = page.raw_text;
    auto word = [&](std::string_view w) {
      if (!text.empty()) text += ' ';
      text += w;
    };
    auto fillers = [&](std::uint64_t lo, std::uint64_t hi) {
      const std::uint64_t n = lo + Draw(rng, hi - lo + 1);
      for (std::uint64_t k = 0; k < n; ++k) word(words[Draw(rng, words.size())]);
    };

    fillers(1, 3);
    word(distractors[page_index % distractors.size()]);
    fillers(1, 2);
    const std::size_t stop = std::min(flat.size(), i + examples_per_page);
    for (std::size_t k = i; k < stop; ++k) {
      const RenderedExample& ex = *flat[k];
      const std::string shown = preprocess_text(ex.text);
      if (!text.empty()) text += ' ';
      Annotation ann;
      ann.page_id = page.page_id;
      ann.span = Span{text.size(), text.size() + shown.size()};
      ann.parts = ex.parts;
      ann.start = ex.range.start;
      ann.end = ex.range.end;
      out.annotations.push_back(std::move(ann));
      text += shown;
      fillers(1, 3);
      if (Draw(rng, 3) == 0) {
        word(distractors[Draw(rng, distractors.size())]);
        fillers(1, 2);
      }
    }
    text += '.';
    page.preprocessed_text = preprocess_text(page.raw_text);
    out.pages.push_back(std::move(page));
    ++page_index;
  }
  return out;
}

}  // namespace datesynth
