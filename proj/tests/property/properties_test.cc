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

// Seeded randomised properties. Each test draws its cases from a fixed
// mt19937_64 stream so failures reproduce exactly.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "datesynth/calendar.h"
#include "datesynth/corpus.h"
#include "datesynth/evaluation.h"
#include "datesynth/extraction.h"
#include "datesynth/ingestion.h"
#include "datesynth/preprocess.h"
#include "datesynth/records.h"
#include "datesynth/regex.h"
#include "datesynth/synthesis.h"
#include "support/language_oracle.h"

namespace datesynth {
namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Coin() { return Int(0, 1) == 1; }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(Int(0, static_cast<int>(v.size()) - 1))];
  }

  CivilDate Date(int min_year = kMinYear, int max_year = kMaxYear) {
    const int y = Int(min_year, max_year);
    const int m = Int(1, 12);
    return {y, m, Int(1, days_in_month(m, y))};
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

TEST(Property, EpochConversionRoundTripsAndIsMonotone) {
  Gen g(1);
  for (int i = 0; i < 20000; ++i) {
    const CivilDate d = g.Date();
    const Seconds ts = civil_to_epoch_midnight(d);
    ASSERT_EQ(ts % kSecondsPerDay, 0);
    ASSERT_EQ(epoch_to_civil(ts), d);
    const CivilDate e = g.Date();
    ASSERT_EQ(d < e, ts < civil_to_epoch_midnight(e));
  }
}

TEST(Property, RangesAreNonEmptyWholeDays) {
  Gen g(2);
  for (int i = 0; i < 20000; ++i) {
    DateParts p;
    p.year = g.Int(1600, 9998);
    const bool month_range = g.Int(0, 4) == 0;
    if (month_range) {
      const int a = g.Int(1, 11);
      p.month = PartRange(a, g.Int(a + 1, 12));
    } else {
      p.month = g.Int(1, 12);
      if (g.Coin()) {
        const int dim = days_in_month(p.month.first, p.year);
        const int a = g.Int(1, dim);
        p.day = (g.Coin() && a < dim) ? PartRange(a, g.Int(a + 1, dim)) : PartRange(a);
      }
    }
    const TimestampRange r = range_of(p);
    ASSERT_LT(r.start, r.end);
    ASSERT_EQ(r.start % kSecondsPerDay, 0);
    ASSERT_EQ(r.end % kSecondsPerDay, 0);
    if (p.day && !p.day->is_range()) ASSERT_EQ(r.end - r.start, kSecondsPerDay);
  }
}

TEST(Property, PreprocessIsIdempotent) {
  Gen g(3);
  const std::vector<std::string> pieces = {"of", "OF", "to", "the", "To", "THE",
                                           " ", "  ", "x", "offer", "-", "\n",
                                           "11th", "June", ",", "toothe"};
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    const int n = g.Int(0, 12);
    for (int k = 0; k < n; ++k) {
      s += g.Pick(pieces);
      if (g.Coin()) s += ' ';
    }
    const std::string once = preprocess_text(s);
    ASSERT_EQ(preprocess_text(once), once) << '"' << s << '"';
  }
}

TEST(Property, BinarizeIsIdempotentAndKeepsShape) {
  Gen g(4);
  for (int i = 0; i < 500; ++i) {
    GrayscaleImage img;
    img.width = static_cast<std::size_t>(g.Int(1, 16));
    img.height = static_cast<std::size_t>(g.Int(1, 16));
    for (std::size_t k = 0; k < img.width * img.height; ++k) {
      img.pixels.push_back(static_cast<std::uint8_t>(g.Int(0, 255)));
    }
    const int t = g.Int(0, 255);
    const GrayscaleImage once = binarize(img, t);
    ASSERT_EQ(binarize(once, t), once);
    ASSERT_EQ(once.width, img.width);
    ASSERT_EQ(once.height, img.height);
    for (std::size_t k = 0; k < img.pixels.size(); ++k) {
      ASSERT_EQ(once.pixels[k], img.pixels[k] > t ? 255 : img.pixels[k]);
    }
  }
}

Fragment RandomLeaf(Gen& g) {
  switch (g.Int(0, 4)) {
    case 0: {
      const std::vector<std::string> lits = {"a", "-", "12", "Jan", "/", "0", " "};
      return Fragment::Literal(g.Pick(lits));
    }
    case 1:
      return Fragment::CharSet(g.Coin() ? "-./" : "ab");
    case 2: {
      const int a = g.Int(1, 2);
      return Fragment::AnyDigit(a, a + g.Int(0, 2));
    }
    case 3: {
      const int a = g.Int(1, 2);
      return Fragment::AnyAlpha(a, a + g.Int(0, 1));
    }
    default: {
      const int lo = g.Int(0, 40);
      return Fragment::NumericRange(lo, lo + g.Int(0, 150), g.Coin());
    }
  }
}

// Alternations use distinct literals of one length so branches stay
// disjoint, as in synthesised patterns.
Fragment RandomFragment(Gen& g, int depth) {
  if (depth == 0) return RandomLeaf(g);
  switch (g.Int(0, 3)) {
    case 0: {
      std::vector<Fragment> parts;
      const int n = g.Int(2, 3);
      for (int i = 0; i < n; ++i) parts.push_back(RandomFragment(g, depth - 1));
      return Fragment::Concat(std::move(parts));
    }
    case 1:
      return Fragment::Optional(RandomFragment(g, depth - 1));
    case 2: {
      const std::vector<std::vector<std::string>> sets = {
          {"70", "1970"}, {"Jan", "Feb", "Mar"}, {"x", "y"}, {"st", "nd", "rd", "th"}};
      std::vector<Fragment> branches;
      for (const auto& s : g.Pick(sets)) branches.push_back(Fragment::Literal(s));
      return Fragment::Alternation(std::move(branches));
    }
    default:
      return RandomLeaf(g);
  }
}

TEST(Property, SerialisedFragmentsAgreeWithTreeMembership) {
  Gen g(5);
  const std::string alphabet = "0123456789aJnF-./ xy";
  for (int i = 0; i < 400; ++i) {
    const Fragment f = RandomFragment(g, 2);
    const Regex re(f.Serialize());
    for (int k = 0; k < 200; ++k) {
      std::string s;
      const int n = g.Int(0, 8);
      for (int c = 0; c < n; ++c) {
        s += alphabet[static_cast<std::size_t>(g.Int(0, static_cast<int>(alphabet.size()) - 1))];
      }
      ASSERT_EQ(re.FullMatch(s), f.Matches(s)) << f.Serialize() << " on '" << s << "'";
    }
  }
}

bool Unambiguous(const Fragment& f) {
  // Concatenations of variable-length pieces can spell one string two
  // ways; the counter assumes they do not. Keep concatenations whose
  // parts are fixed-length or separated by a literal.
  if (f.kind() == FragmentKind::kConcat) {
    bool prev_variable = false;
    for (const auto& c : f.children()) {
      const auto counts = c.CountByLength(12);
      int lengths = 0;
      for (auto v : counts) lengths += v > 0;
      const bool variable = lengths > 1;
      if (variable && prev_variable) return false;
      prev_variable = variable;
      if (!Unambiguous(c)) return false;
    }
    return true;
  }
  for (const auto& c : f.children()) {
    if (!Unambiguous(c)) return false;
  }
  return true;
}

TEST(Property, LanguageSizeMatchesExhaustiveCount) {
  Gen g(6);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 120; ++i) {
    const Fragment f = RandomFragment(g, 2);
    if (!Unambiguous(f)) continue;
    ++checked;
    const auto oracle = testing::BruteForceCounts(f, 6);
    const auto counted = f.CountByLength(6);
    for (int len = 0; len <= 6; ++len) {
      ASSERT_EQ(counted[len], oracle[len]) << f.Serialize() << " length " << len;
    }
  }
  EXPECT_GE(checked, 60);
}

TEST(Property, RenderedDatesRoundTrip) {
  Gen g(7);
  GenerationConfig cfg;
  for (int i = 0; i < 300; ++i) {
    const CivilDate d = g.Date(1900, 2100);
    std::vector<RenderedExample> all = render_numeric_variants(d, cfg);
    for (auto& e : render_monthname_variants(d, false, cfg)) all.push_back(e);
    for (auto& e : render_monthname_variants(d, true, cfg)) all.push_back(e);
    for (auto& e : render_longform_variants(d)) all.push_back(e);
    const int dim = days_in_month(d.month, d.year);
    const int a = g.Int(1, dim - 1);
    for (auto& e : render_day_range_variants(d.month, d.year, cfg, a, std::min(dim, a + 1))) {
      all.push_back(e);
    }
    for (const auto& e : all) ASSERT_TRUE(round_trips(e)) << e.text;
  }
}

TEST(Property, SynthesisedPatternsAreSoundAndCheapest) {
  Gen g(8);
  const CostParams params;
  for (int trial = 0; trial < 40; ++trial) {
    GenerationConfig cfg;
    cfg.start_date = g.Date(1900, 2099);
    cfg.end_date = cfg.start_date;
    cfg.end_date.day = std::min(days_in_month(cfg.start_date.month, cfg.start_date.year),
                                cfg.start_date.day + g.Int(0, 3));
    cfg.families = {g.Coin() ? Family::kNumericShort : Family::kMonthnameDayless};
    std::vector<RenderedExample> examples;
    for_each_example(cfg, [&](const RenderedExample& ex) { examples.push_back(ex); });
    std::shuffle(examples.begin(), examples.end(), g.rng());
    examples.resize(std::min<std::size_t>(examples.size(), 50));
    for (const Cluster& c : cluster_by_shape(examples)) {
      const SynthesisResult r = synthesize_cluster(c, params);
      const Regex re(r.entry.pattern);
      for (const auto& t : c.texts()) ASSERT_TRUE(re.FullMatch(t)) << t;
      const SynthesisDag dag = build_dag(c, params);
      for (const auto& p : enumerate_paths(dag)) {
        ASSERT_GE(p.cost + 1e-9, r.cost) << p.serialized << " vs " << r.entry.pattern;
      }
    }
  }
}

TEST(Property, ScanNeverOverlapsAndRangesFollowParts) {
  GenerationConfig cfg;
  cfg.start_date = {1999, 12, 25};
  cfg.end_date = {2000, 1, 5};
  const Corpus corpus = build_training_corpus(cfg);
  const CompiledBank bank(synthesize_bank(corpus, CostParams{}));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const EvaluationCorpus ev = inject_noise(corpus, seed, 9);
    for (std::size_t p = 0; p < ev.pages.size(); p += 7) {
      const auto dets = scan_page(ev.pages[p], bank);
      for (std::size_t i = 0; i < dets.size(); ++i) {
        ASSERT_TRUE(dets[i].parts.has_value());
        ASSERT_EQ(dets[i].range, range_of(*dets[i].parts));
        ASSERT_LE(dets[i].span.end, ev.pages[p].preprocessed_text.size());
        if (i > 0) ASSERT_LE(dets[i - 1].span.end, dets[i].span.begin);
      }
    }
  }
}

Detection AsDetection(const Annotation& a) {
  Detection d;
  d.page_id = a.page_id;
  d.span = a.span.value_or(Span{});
  d.range = a.range();
  return d;
}

Annotation AsAnnotation(const Detection& d) {
  Annotation a;
  a.page_id = d.page_id;
  a.span = d.span;
  a.start = d.range->start;
  a.end = d.range->end;
  return a;
}

TEST(Property, MatchingIsSymmetricInCount) {
  Gen g(9);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Detection> dets;
    std::vector<Annotation> anns;
    auto stamp = [&] { return static_cast<Seconds>(g.Int(0, 5)) * kSecondsPerDay; };
    const int nd = g.Int(0, 8), na = g.Int(0, 8);
    for (int i = 0; i < nd; ++i) {
      Detection d;
      d.page_id = g.Coin() ? "a" : "b";
      const Seconds s = stamp();
      d.range = TimestampRange{s, s + kSecondsPerDay * g.Int(1, 2)};
      dets.push_back(d);
    }
    for (int i = 0; i < na; ++i) {
      Annotation a;
      a.page_id = g.Coin() ? "a" : "b";
      a.start = stamp();
      a.end = a.start + kSecondsPerDay * g.Int(1, 2);
      anns.push_back(a);
    }
    const ConfusionMatrix cm = match_detections(dets, anns);
    std::vector<Detection> swapped_d;
    std::vector<Annotation> swapped_a;
    for (const auto& a : anns) swapped_d.push_back(AsDetection(a));
    for (const auto& d : dets) swapped_a.push_back(AsAnnotation(d));
    const ConfusionMatrix sw = match_detections(swapped_d, swapped_a);
    ASSERT_EQ(cm.tp, sw.tp);
    ASSERT_EQ(cm.fp, sw.fn);
    ASSERT_EQ(cm.fn, sw.fp);
    ASSERT_EQ(cm.tp + cm.fn, anns.size());
    for (auto m : {precision(cm), recall(cm)}) {
      if (m) ASSERT_TRUE(*m >= 0.0 && *m <= 1.0);
    }
  }
}

TEST(Property, AnnotationLoadAccountsForEveryRecord) {
  Gen g(10);
  for (int trial = 0; trial < 50; ++trial) {
    std::string file = HeaderLine(RecordKind::kAnnotations) + "\n";
    const int n = g.Int(0, 30);
    for (int i = 0; i < n; ++i) {
      const CivilDate d = g.Date(1900, 2100);
      Annotation a;
      a.page_id = "p";
      a.parts.day = d.day;
      a.parts.month = d.month;
      a.parts.year = d.year;
      const TimestampRange r = range_of(a.parts);
      a.start = r.start;
      a.end = r.end + (g.Int(0, 4) == 0 ? kSecondsPerDay : 0);
      std::string line = EncodeAnnotation(a);
      switch (g.Int(0, 5)) {
        case 0:
          line = line.substr(0, line.size() / 2);
          break;
        case 1: {
          const auto at = line.find("\"year\":");
          line = line.substr(0, at) + "\"year\":null," +
                 line.substr(line.find(',', at) + 1);
          break;
        }
        default:
          break;
      }
      file += line + "\n";
    }
    std::istringstream in(file);
    const AnnotationLoad load = load_annotations(in);
    ASSERT_EQ(load.records, static_cast<std::size_t>(n));
    ASSERT_EQ(load.annotations.size() + load.dropped(), load.records);
    for (const auto& a : load.annotations) ASSERT_EQ(range_of(a.parts), a.range());
  }
}

}  // namespace
}  // namespace datesynth
