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

#include <gtest/gtest.h>

#include "datesynth/preprocess.h"
#include "datesynth/synthesis.h"

namespace datesynth {
namespace {

// Synthesised over 2000..2010 without day ranges, which keeps it fast.
const CompiledBank& SynthesizedBank() {
  static const CompiledBank bank = [] {
    GenerationConfig cfg;
    cfg.start_date = {2000, 1, 1};
    cfg.end_date = {2010, 12, 31};
    cfg.families = {Family::kNumericShort, Family::kMonthnameDayless,
                    Family::kLongformOrdinal};
    ClusterAccumulator acc(false);
    for_each_example(cfg, [&](const RenderedExample& ex) { acc.Add(ex); });
    return CompiledBank(synthesize_bank(std::move(acc).Finish(), CostParams{}));
  }();
  return bank;
}

const CompiledBank& Bespoke() {
  static const CompiledBank bank(builtin_bespoke_bank());
  return bank;
}

std::vector<Detection> Scan(const std::string& text, const CompiledBank& bank,
                            ScanStats* stats = nullptr) {
  return scan(preprocess_text(text), bank, "p", stats);
}

TEST(Scan, RepeatedDatesAreDetectedAtEachSpan) {
  const auto d = Scan("seen 01/02/2001 twice 01/02/2001", SynthesizedBank());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].range, d[1].range);
  EXPECT_NE(d[0].span, d[1].span);
  EXPECT_EQ(d[0].span, (Span{5, 15}));
  EXPECT_EQ(d[0].matched_text, "01/02/2001");
  EXPECT_EQ(d[0].range->start, civil_to_epoch_midnight({2001, 2, 1}));
}

TEST(Scan, InvalidCalendarDatesProduceNothing) {
  ScanStats stats;
  EXPECT_TRUE(Scan("31/02/2001", SynthesizedBank(), &stats).empty());
  EXPECT_GE(stats.rejected, 1u);
  EXPECT_EQ(stats.decomposition_errors, 0u);
  for (const auto& s : distractor_strings()) {
    EXPECT_TRUE(Scan(s, SynthesizedBank()).empty()) << s;
  }
}

TEST(Scan, MonthYear) {
  const auto d = Scan("Jan 2010", SynthesizedBank());
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].range->start, civil_to_epoch_midnight({2010, 1, 1}));
  EXPECT_EQ(d[0].range->end, civil_to_epoch_midnight({2010, 2, 1}));
  ASSERT_TRUE(d[0].parts.has_value());
  EXPECT_EQ(d[0].range, range_of(*d[0].parts));
}

TEST(Scan, LeftmostLongestWithTokenBoundaries) {
  const auto d = Scan("ref 3-Apr-08 and 15/2006/7 and 12/2005", SynthesizedBank());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].matched_text, "3-Apr-08");
  EXPECT_EQ(d[1].matched_text, "12/2005");
}

TEST(Scan, MixedAlphanumericWordsAreNotSplit) {
  const auto d = Scan("dose x3 Jan 2010", SynthesizedBank());
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].matched_text, "Jan 2010");
  EXPECT_TRUE(Scan("ref A5/2006 and 5/2006b", SynthesizedBank()).empty());
}

TEST(Scan, RejectedPrefixDoesNotShadowALaterStart) {
  ScanStats stats;
  const auto d = Scan("on 29 Feb 2001", SynthesizedBank(), &stats);
  EXPECT_EQ(stats.rejected, 1u);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].matched_text, "Feb 2001");
}

TEST(Scan, DetectionsNeverOverlap) {
  const auto d = Scan("1/2/2001/3/2002 Jan 2010 Feb 2010 5/2006", SynthesizedBank());
  for (std::size_t i = 1; i < d.size(); ++i) {
    EXPECT_LE(d[i - 1].span.end, d[i].span.begin);
  }
}

TEST(Scan, TiesGoToTheLowerPriority) {
  RegexBank bank;
  bank.provenance = Provenance::kCommunity;
  bank.entries = {{5, "[0-9]+", {}, "late"}, {1, "[0-9]{2}", {}, "early"}};
  const CompiledBank compiled(bank);
  const auto d = scan("ab 42 cd", compiled);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].bank_entry, 1);
  EXPECT_FALSE(d[0].parts.has_value());
  EXPECT_FALSE(d[0].range.has_value());
}

TEST(Scan, MapMismatchIsCountedNotEmitted) {
  RegexBank bank;
  bank.entries = {{0, "[0-9]+", {DecomposeOp::Split("/"), DecomposeOp::Index(3),
                                 DecomposeOp::Assign(PartKind::kDay)},
                   "broken"}};
  ScanStats stats;
  EXPECT_TRUE(scan("12", CompiledBank(bank), "", &stats).empty());
  EXPECT_EQ(stats.decomposition_errors, 1u);
}

TEST(CompiledBank, RejectsBadBanks) {
  RegexBank dup;
  dup.entries = {{0, "a", {}, ""}, {0, "b", {}, ""}};
  EXPECT_THROW(CompiledBank{dup}, std::invalid_argument);
  RegexBank bad;
  bad.entries = {{0, "(a", {}, ""}};
  EXPECT_THROW(CompiledBank{bad}, std::invalid_argument);
}

TEST(CommunityBank, VerbatimEntry) {
  const RegexBank bank = builtin_community_bank();
  ASSERT_EQ(bank.entries.size(), 4u);
  for (const auto& e : bank.entries) EXPECT_FALSE(e.has_map());
  const Regex fourth(bank.entries[3].pattern);
  EXPECT_EQ(bank.entries[3].pattern,
            "(\\d{1,2}[-\\./](0?[1-9]|1[012])[-\\./]((19|20)\\d{2}))");
  EXPECT_TRUE(fourth.FullMatch("01/02/2001"));
  EXPECT_FALSE(fourth.FullMatch("01/02/98"));
  EXPECT_TRUE(Regex(bank.entries[0].pattern).FullMatch("14 January 2020"));
  EXPECT_FALSE(Regex(bank.entries[0].pattern).FullMatch("14 Jan 2020"));
  EXPECT_TRUE(Regex(bank.entries[1].pattern).FullMatch("1/12/2020"));
  EXPECT_TRUE(Regex(bank.entries[2].pattern).FullMatch("30 12 98"));
  EXPECT_FALSE(Regex(bank.entries[2].pattern).FullMatch("31 12 98"));
}

TEST(BespokeBank, CoversTheDescribedForms) {
  auto one = [](const std::string& text) {
    const auto d = Scan(text, Bespoke());
    EXPECT_EQ(d.size(), 1u) << text;
    return d.empty() ? Detection{} : d[0];
  };
  EXPECT_EQ(one("5/2006").parts->month, PartRange(5));
  EXPECT_EQ(one("01/02/2001").parts->day, PartRange(1));
  const Detection months = one("March-June 2002");
  EXPECT_EQ(months.matched_text, "March-June 2002");
  EXPECT_EQ(months.parts->month, PartRange(3, 6));
  EXPECT_EQ(months.range->end, civil_to_epoch_midnight({2002, 7, 1}));
  EXPECT_EQ(one("March - June 2002").parts->month, PartRange(3, 6));
  EXPECT_EQ(one("1 - 3.4.98").parts->day, PartRange(1, 3));
  EXPECT_EQ(one("01-02/01/1990").parts->day, PartRange(1, 2));
  EXPECT_EQ(one("11th of June, 96").parts->year, 1996);
  EXPECT_EQ(one("11th June 96").parts->year, 1996);
  EXPECT_EQ(one("1st - 3rd June, 2001").parts->day, PartRange(1, 3));
  EXPECT_EQ(one("Sept 2001").parts->month, PartRange(9));
  EXPECT_EQ(one("3 APR 1998").parts->day, PartRange(3));
}

TEST(BespokeBank, DoubleRangeIsRejectedAtValidation) {
  ScanStats stats;
  EXPECT_TRUE(Scan("the 1st-3rd of May-June, 2001", Bespoke(), &stats).empty());
  EXPECT_GE(stats.rejected, 1u);
}

TEST(Multiline, Assembly) {
  auto one = assemble_multiline({"03", "04", "1998"});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].text, "03/04/1998");
  EXPECT_EQ(one[0].sources,
            (std::vector<Span>{{0, 2}, {3, 5}, {6, 10}}));
  auto dayless = assemble_multiline({"Jan", "2010"});
  ASSERT_EQ(dayless.size(), 1u);
  EXPECT_EQ(dayless[0].text, "Jan/2010");
  EXPECT_TRUE(assemble_multiline({"hello", "world"}).empty());
  EXPECT_TRUE(assemble_multiline({"03", "04"}).empty());
  EXPECT_EQ(assemble_multiline({" 7 ", "Mar", "01", "x"})[0].sources.front(),
            (Span{1, 2}));
}

TEST(Multiline, ScanPageAddsVerticalDates) {
  Page page;
  page.page_id = "p1";
  page.raw_text = "admitted\n03\n04\n1998\nseen 5/2006";
  page.preprocessed_text = preprocess_text(page.raw_text);
  const auto d = scan_page(page, Bespoke());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].matched_text, "03/04/1998");
  EXPECT_EQ(d[0].span, (Span{9, 19}));
  EXPECT_EQ(d[0].range->start, civil_to_epoch_midnight({1998, 4, 3}));
  EXPECT_EQ(d[1].matched_text, "5/2006");
  EXPECT_EQ(d[0].page_id, "p1");
}

}  // namespace
}  // namespace datesynth
