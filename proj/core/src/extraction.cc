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

#include "datesynth/extraction.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "datesynth/extraction_map.h"
#include "datesynth/preprocess.h"

namespace datesynth {

namespace {

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool IsWordChar(char c) { return IsDigit(c) || IsAlpha(c); }
bool IsSeparator(char c) { return c == '-' || c == '.' || c == '/'; }

// Letters and digits form one word: "x3 Jan 70" holds no day.
bool InsideWord(char a, char b) { return IsWordChar(a) && IsWordChar(b); }

bool StartAllowed(std::string_view text, std::size_t s) {
  if (s == 0) return true;
  if (InsideWord(text[s - 1], text[s])) return false;
  if (s >= 2 && IsSeparator(text[s - 1]) && IsWordChar(text[s - 2])) {
    return false;
  }
  return true;
}

bool EndAllowed(std::string_view text, std::size_t e) {
  if (e >= text.size()) return true;
  if (InsideWord(text[e - 1], text[e])) return false;
  if (e + 1 < text.size() && IsSeparator(text[e]) && IsWordChar(text[e + 1])) {
    return false;
  }
  return true;
}

std::string_view TrimLine(std::string_view line, std::size_t& offset) {
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
    line.remove_prefix(1);
    ++offset;
  }
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                           line.back() == '\r')) {
    line.remove_suffix(1);
  }
  return line;
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsDigit);
}

int ToInt(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

bool LoneDay(std::string_view s) {
  return AllDigits(s) && s.size() <= 2 && ToInt(s) >= 1 && ToInt(s) <= 31;
}

bool LoneMonth(std::string_view s) {
  if (AllDigits(s)) return s.size() <= 2 && ToInt(s) >= 1 && ToInt(s) <= 12;
  return std::all_of(s.begin(), s.end(), IsAlpha) &&
         try_month_from_name(s).has_value();
}

bool LoneYear(std::string_view s) {
  return AllDigits(s) && (s.size() == 2 || s.size() == 4);
}

std::string MonthNameAlternation() {
  std::set<std::string> names;
  for (int m = 1; m <= 12; ++m) {
    const std::string full(month_full_name(m));
    for (std::size_t len : {std::size_t{3}, std::size_t{4}, full.size()}) {
      if (len > full.size()) continue;
      std::string name = full.substr(0, len);
      names.insert(name);
      std::string lower = name;
      std::string upper = name;
      for (char& c : lower) c = static_cast<char>(std::tolower(c));
      for (char& c : upper) c = static_cast<char>(std::toupper(c));
      names.insert(lower);
      names.insert(upper);
    }
  }
  std::string out = "(";
  for (const auto& n : names) {
    if (out.size() > 1) out += '|';
    out += n;
  }
  return out + ")";
}

}  // namespace

CompiledBank::CompiledBank(RegexBank bank) : bank_(std::move(bank)) {
  bank_.Validate();
  std::stable_sort(bank_.entries.begin(), bank_.entries.end(),
                   [](const RegexEntry& a, const RegexEntry& b) {
                     return a.priority < b.priority;
                   });
  regexes_.reserve(bank_.entries.size());
  for (const auto& e : bank_.entries) regexes_.emplace_back(e.pattern);
}

ScanStats& ScanStats::operator+=(const ScanStats& other) {
  accepted += other.accepted;
  rejected += other.rejected;
  decomposition_errors += other.decomposition_errors;
  return *this;
}

std::vector<Detection> scan(std::string_view text, const CompiledBank& bank,
                            std::string_view page_id, ScanStats* stats) {
  ScanStats local;
  std::vector<Detection> out;
  Regex::Scratch scratch;
  std::vector<std::size_t> ends;
  std::size_t s = 0;
  while (s < text.size()) {
    if (!StartAllowed(text, s)) {
      ++s;
      continue;
    }
    const auto c = static_cast<unsigned char>(text[s]);
    std::size_t best_end = 0;
    std::size_t best_entry = 0;
    for (std::size_t i = 0; i < bank.size(); ++i) {
      const Regex& re = bank.regex(i);
      if (!re.first_chars().test(c)) continue;
      re.MatchEnds(text, s, scratch, ends);
      for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
        if (!EndAllowed(text, *it)) continue;
        // Entries are visited in priority order, so only a strictly
        // longer match displaces the current choice.
        if (*it > best_end) {
          best_end = *it;
          best_entry = i;
        }
        break;
      }
    }
    if (best_end == 0) {
      ++s;
      continue;
    }

    const RegexEntry& entry = bank.entry(best_entry);
    Detection d;
    d.page_id = std::string(page_id);
    d.span = {s, best_end};
    d.matched_text = std::string(text.substr(s, best_end - s));
    d.bank_entry = entry.priority;
    if (entry.has_map()) {
      const DecomposeResult r = try_decompose(d.matched_text, entry.extraction_map);
      std::optional<TimestampRange> range;
      if (r.status == DecomposeStatus::kOk) range = try_range_of(r.parts);
      if (!range) {
        if (r.status == DecomposeStatus::kDecompositionError) {
          ++local.decomposition_errors;
        } else {
          ++local.rejected;
        }
        ++s;
        continue;
      }
      d.parts = r.parts;
      d.range = range;
    }
    ++local.accepted;
    out.push_back(std::move(d));
    s = best_end;
  }
  if (stats) *stats += local;
  return out;
}

std::vector<MultilineCandidate> assemble_multiline(
    const std::vector<std::string>& lines) {
  struct Line {
    std::string_view text;
    Span span;
  };
  std::vector<Line> trimmed;
  std::size_t offset = 0;
  for (const auto& raw : lines) {
    std::size_t begin = offset;
    const std::string_view t = TrimLine(raw, begin);
    trimmed.push_back({t, Span{begin, begin + t.size()}});
    offset += raw.size() + 1;
  }

  std::vector<MultilineCandidate> out;
  std::size_t i = 0;
  while (i < trimmed.size()) {
    auto at = [&](std::size_t k) -> std::string_view {
      return k < trimmed.size() ? trimmed[k].text : std::string_view();
    };
    std::size_t take = 0;
    if (LoneDay(at(i)) && LoneMonth(at(i + 1)) && LoneYear(at(i + 2))) {
      take = 3;
    } else if (LoneMonth(at(i)) && LoneYear(at(i + 1)) &&
               (!AllDigits(at(i)) || at(i + 1).size() == 4)) {
      // Two stacked small numbers are too common to read as a month-year.
      take = 2;
    }
    if (take == 0) {
      ++i;
      continue;
    }
    MultilineCandidate cand;
    for (std::size_t k = i; k < i + take; ++k) {
      if (!cand.text.empty()) cand.text += '/';
      cand.text += trimmed[k].text;
      cand.sources.push_back(trimmed[k].span);
    }
    out.push_back(std::move(cand));
    i += take;
  }
  return out;
}

std::vector<Detection> scan_page(const Page& page, const CompiledBank& bank,
                                 ScanStats* stats) {
  const std::string text = page.preprocessed_text.empty()
                               ? preprocess_text(page.raw_text)
                               : page.preprocessed_text;
  std::vector<Detection> out = scan(text, bank, page.page_id, stats);
  if (text.find('\n') == std::string::npos) return out;

  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t p = 0; p <= text.size(); ++p) {
    if (p == text.size() || text[p] == '\n') {
      lines.push_back(text.substr(start, p - start));
      start = p + 1;
    }
  }
  for (const auto& cand : assemble_multiline(lines)) {
    for (Detection& d : scan(cand.text, bank, page.page_id, stats)) {
      if (d.span.begin != 0 || d.span.end != cand.text.size()) continue;
      d.span = {cand.sources.front().begin, cand.sources.back().end};
      const bool clash =
          std::any_of(out.begin(), out.end(), [&](const Detection& other) {
            return other.span.Overlaps(d.span);
          });
      if (!clash) out.push_back(std::move(d));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Detection& a, const Detection& b) {
                     return a.span.begin < b.span.begin;
                   });
  return out;
}

RegexBank builtin_community_bank() {
  RegexBank bank;
  bank.provenance = Provenance::kCommunity;
  // A number, a full month name and a four digit year.
  bank.entries.push_back(
      {1,
       "\\d+ (January|February|March|April|May|June|July|August|September|"
       "October|November|December) \\d{4}",
       {},
       "day-fullmonth-year"});
  bank.entries.push_back({2, "\\d{1,2}/\\d{1,2}/\\d{4}", {}, "slash-dmy"});
  // Day up to 30, month up to 12, two or four digit year.
  bank.entries.push_back(
      {3, "([0-2]?[0-9]|30)[ /-](0?[0-9]|1[0-2])[ /-](\\d{4}|\\d{2})", {},
       "bounded-dmy"});
  // Verbatim as circulated.
  bank.entries.push_back(
      {4, "(\\d{1,2}[-\\./](0?[1-9]|1[012])[-\\./]((19|20)\\d{2}))", {},
       "generated-dmy"});
  return bank;
}

RegexBank builtin_bespoke_bank() {
  using Op = DecomposeOp;
  const std::string day = "(0?[1-9]|[12][0-9]|3[01])";
  const std::string month = "(0?[1-9]|1[0-2])";
  const std::string year = "([0-9]{4}|[0-9]{2})";
  const std::string name = MonthNameAlternation();
  const std::string ord = "([1-9]|[12][0-9]|3[01])(st|nd|rd|th)";
  const std::string dash = " ?- ?";
  const std::string sep = "[-./]";
  const std::string wsep = "[ -./]";

  const ExtractionMap year_last = {Op::Index(-1), Op::PivotYear(),
                                   Op::Assign(PartKind::kYear)};
  auto with_year = [&](ExtractionMap head) {
    head.insert(head.end(), year_last.begin(), year_last.end());
    return head;
  };

  RegexBank bank;
  bank.provenance = Provenance::kBespoke;
  int priority = 0;
  auto add = [&](std::string pattern, ExtractionMap map, std::string label) {
    bank.entries.push_back(
        {priority++, std::move(pattern), std::move(map), std::move(label)});
  };

  add(day + dash + day + sep + month + sep + year,
      with_year({Op::Split(" -./"), Op::Pair(0, 1), Op::Assign(PartKind::kDay),
                 Op::Index(-2), Op::Assign(PartKind::kMonth)}),
      "numeric-day-range");
  add("(" + day + sep + ")?" + month + sep + year,
      with_year({Op::Split("-./"), Op::Index(-3, true),
                 Op::Assign(PartKind::kDay), Op::Index(-2),
                 Op::Assign(PartKind::kMonth)}),
      "numeric");
  add(day + dash + day + wsep + name + wsep + year,
      with_year({Op::Split(" -./"), Op::Pair(0, 1), Op::Assign(PartKind::kDay),
                 Op::Index(-2), Op::MonthName(), Op::Assign(PartKind::kMonth)}),
      "monthname-day-range");
  add(name + dash + name + wsep + year,
      with_year({Op::Split(" -./"), Op::Pair(0, 1), Op::MonthName(),
                 Op::Assign(PartKind::kMonth)}),
      "monthname-month-range");
  add("(" + day + wsep + ")?" + name + wsep + year,
      with_year({Op::Split(" -./"), Op::Index(-3, true),
                 Op::Assign(PartKind::kDay), Op::Index(-2), Op::MonthName(),
                 Op::Assign(PartKind::kMonth)}),
      "monthname");
  add(ord + "(-" + ord + ")? " + name + "(-" + name + ")?,? " + year,
      with_year({Op::Split(" ,"), Op::Index(0), Op::SplitHyphenRange(),
                 Op::StripOrdinal(), Op::Assign(PartKind::kDay), Op::Index(-2),
                 Op::SplitHyphenRange(), Op::MonthName(),
                 Op::Assign(PartKind::kMonth)}),
      "long-ordinal");
  add(ord + " - " + ord + " " + name + ",? " + year,
      with_year({Op::Split(" ,"), Op::Pair(0, 2), Op::StripOrdinal(),
                 Op::Assign(PartKind::kDay), Op::Index(-2), Op::MonthName(),
                 Op::Assign(PartKind::kMonth)}),
      "long-ordinal-spaced-range");
  return bank;
}

}  // namespace datesynth
