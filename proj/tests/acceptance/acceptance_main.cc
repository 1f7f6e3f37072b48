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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "datesynth/calendar.h"
#include "datesynth/corpus.h"
#include "datesynth/evaluation.h"
#include "datesynth/extraction.h"
#include "datesynth/preprocess.h"
#include "datesynth/records.h"
#include "datesynth/regex.h"
#include "datesynth/synthesis.h"
#include "datesynth_cli/cli.h"
#include "support/language_oracle.h"

namespace ds = datesynth;

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void Report(const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail
            << std::endl;
  if (!o.pass) ++g_failures;
}

template <typename F>
void Run(const std::string& name, F&& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  Report(name, o);
}

std::string Fmt(double v, int digits = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

// Walks day by day from the epoch, counting seconds independently of the
// conversion under test.
Outcome EpochOracle() {
  const auto t0 = Clock::now();
  std::map<ds::CivilDate, ds::Seconds> oracle;
  auto step = [](ds::CivilDate d, int dir) {
    static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    auto dim = [](int m, int y) {
      const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
      return m == 2 && leap ? 29 : kDays[m - 1];
    };
    if (dir > 0) {
      if (++d.day > dim(d.month, d.year)) {
        d.day = 1;
        if (++d.month > 12) {
          d.month = 1;
          ++d.year;
        }
      }
    } else if (--d.day < 1) {
      if (--d.month < 1) {
        d.month = 12;
        --d.year;
      }
      d.day = dim(d.month, d.year);
    }
    return d;
  };
  const ds::CivilDate lo{1900, 1, 1}, hi{2100, 12, 31};
  ds::CivilDate d{1970, 1, 1};
  ds::Seconds ts = 0;
  for (; d <= hi; d = step(d, +1), ts += ds::kSecondsPerDay) oracle[d] = ts;
  d = {1969, 12, 31};
  ts = -ds::kSecondsPerDay;
  for (; d >= lo; d = step(d, -1), ts -= ds::kSecondsPerDay) oracle[d] = ts;

  std::size_t mismatches = 0;
  for (const auto& [date, seconds] : oracle) {
    if (ds::civil_to_epoch_midnight(date) != seconds ||
        ds::epoch_to_civil(seconds) != date) {
      ++mismatches;
    }
  }
  const double secs = SecondsSince(t0);
  Outcome o;
  o.pass = mismatches == 0 && oracle.size() == 73414 && secs < 5.0;
  o.detail = std::to_string(oracle.size()) + " dates, " +
             std::to_string(mismatches) + " mismatches, " + Fmt(secs) + " s";
  return o;
}

Outcome RoundTrip() {
  const auto t0 = Clock::now();
  ds::GenerationConfig cfg;
  cfg.start_date = {1960, 1, 1};
  cfg.end_date = {1980, 12, 31};

  ds::ClusterAccumulator acc(false);
  ds::for_each_example(cfg, [&](const ds::RenderedExample& ex) { acc.Add(ex); });
  const ds::RegexBank bank =
      ds::synthesize_bank(std::move(acc).Finish(), ds::CostParams{});
  const ds::CompiledBank compiled(bank);

  std::size_t total = 0, found = 0;
  std::string first_miss;
  ds::for_each_example(cfg, [&](const ds::RenderedExample& ex) {
    ++total;
    const std::string text = ds::synthesis_text(ex);
    const auto dets = ds::scan(text, compiled);
    const bool hit = dets.size() == 1 && dets[0].span.begin == 0 &&
                     dets[0].span.end == text.size() && dets[0].parts &&
                     *dets[0].parts == ex.parts && dets[0].range == ex.range;
    if (hit) {
      ++found;
    } else if (first_miss.empty()) {
      first_miss = text;
    }
  });
  const double secs = SecondsSince(t0);
  const double recall = total ? static_cast<double>(found) / total : 0.0;
  Outcome o;
  o.pass = total > 0 && found == total && secs < 120.0;
  o.detail = "recall " + Fmt(recall, 6) + " over " + std::to_string(total) +
             " examples, " + std::to_string(bank.entries.size()) +
             " entries, " + Fmt(secs) + " s";
  if (!first_miss.empty()) o.detail += ", first miss \"" + first_miss + "\"";
  return o;
}

Outcome SoundnessMinimality() {
  const ds::CostParams params;
  std::size_t clusters = 0, paths = 0, fragments = 0;
  std::string problem;

  // Full clusters from one year: every retained text must match.
  ds::GenerationConfig year;
  year.start_date = {1970, 1, 1};
  year.end_date = {1970, 12, 31};
  ds::ClusterAccumulator acc(true);
  ds::for_each_example(year, [&](const ds::RenderedExample& ex) { acc.Add(ex); });
  for (const ds::Cluster& c : std::move(acc).Finish()) {
    const auto r = ds::synthesize_cluster(c, params);
    const ds::Regex re(r.entry.pattern);
    for (const auto& t : c.texts()) {
      if (!re.FullMatch(t) && problem.empty()) {
        problem = r.entry.pattern + " misses " + t;
      }
    }
  }

  // Small clusters: exhaustive path enumeration and exact language counts.
  std::mt19937_64 rng(20240501);
  for (ds::Family family : ds::kAllFamilies) {
    for (int trial = 0; trial < 8; ++trial) {
      ds::GenerationConfig cfg;
      const int y = std::uniform_int_distribution<int>(1900, 2099)(rng);
      const int m = std::uniform_int_distribution<int>(1, 12)(rng);
      cfg.start_date = {y, m, 1};
      cfg.end_date = {y, m, std::min(ds::days_in_month(m, y), 1 + trial)};
      cfg.families = {family};
      std::vector<ds::RenderedExample> examples;
      ds::for_each_example(cfg, [&](const ds::RenderedExample& ex) {
        examples.push_back(ex);
      });
      std::shuffle(examples.begin(), examples.end(), rng);
      examples.resize(std::min<std::size_t>(examples.size(), 50));
      for (const ds::Cluster& c : ds::cluster_by_shape(examples)) {
        if (c.columns().size() > 6 || c.size() > 50) continue;
        ++clusters;
        const auto r = ds::synthesize_cluster(c, params);
        const ds::Regex re(r.entry.pattern);
        for (const auto& t : c.texts()) {
          if (!re.FullMatch(t) && problem.empty()) {
            problem = r.entry.pattern + " misses " + t;
          }
        }
        const ds::SynthesisDag dag = ds::build_dag(c, params);
        for (const auto& p : ds::enumerate_paths(dag)) {
          ++paths;
          if (p.cost + 1e-9 < r.cost && problem.empty()) {
            problem = p.serialized + " is cheaper than " + r.entry.pattern;
          }
        }
        std::vector<ds::Fragment> checked = {r.pattern};
        for (const auto& e : dag.edges) {
          if (!e.epsilon) checked.push_back(e.fragment);
        }
        for (const auto& f : checked) {
          ++fragments;
          const auto counted = f.CountByLength(6);
          const auto oracle = ds::testing::BruteForceCounts(f, 6);
          if (counted != oracle && problem.empty()) {
            problem = "U mismatch for " + f.Serialize();
          }
        }
      }
    }
  }
  Outcome o;
  o.pass = problem.empty() && clusters > 0;
  o.detail = std::to_string(clusters) + " small clusters, " +
             std::to_string(paths) + " paths, " + std::to_string(fragments) +
             " fragments counted";
  if (!problem.empty()) o.detail += "; " + problem;
  return o;
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Row {
  double precision = -1;
  double recall = -1;
};

// report.tsv: bank, mode, tp, fp, fn, precision, recall.
std::map<std::string, Row> ReadReport(const std::filesystem::path& p) {
  std::istringstream in(Slurp(p));
  std::string line;
  std::getline(in, line);
  std::map<std::string, Row> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, '\t');) cells.push_back(cell);
    if (cells.size() != 7) continue;
    auto num = [](const std::string& s) { return s == "n/a" ? -1.0 : std::stod(s); };
    rows[cells[0]] = {num(cells[5]), num(cells[6])};
  }
  return rows;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("datesynth-acceptance-" + tag + "-" +
             std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

Outcome Distractors(const std::filesystem::path& bench) {
  std::ifstream bank_in(bench / "bank.jsonl");
  const ds::CompiledBank bank(ds::read_bank(bank_in));
  std::size_t standalone = 0;
  for (const auto& s : ds::distractor_strings()) {
    standalone += ds::scan(ds::preprocess_text(s), bank).size();
  }

  std::ifstream pages_in(bench / "pages.jsonl");
  const auto pages = ds::read_pages(pages_in);
  std::ifstream dets_in(bench / "detections-synthesized.jsonl");
  const auto dets = ds::read_detections(dets_in).detections;
  std::size_t occurrences = 0, overlapping = 0;
  for (const auto& page : pages) {
    std::vector<ds::Span> spots;
    for (const auto& s : ds::distractor_strings()) {
      for (auto at = page.preprocessed_text.find(s); at != std::string::npos;
           at = page.preprocessed_text.find(s, at + 1)) {
        spots.push_back({at, at + s.size()});
      }
    }
    occurrences += spots.size();
    for (const auto& d : dets) {
      if (d.page_id != page.page_id) continue;
      for (const auto& sp : spots) overlapping += d.span.Overlaps(sp);
    }
  }
  const auto rows = ReadReport(bench / "report.tsv");
  const double p = rows.count("synthesized") ? rows.at("synthesized").precision : -1;
  Outcome o;
  o.pass = standalone == 0 && overlapping == 0 && occurrences > 0 && p >= 0.95;
  o.detail = std::to_string(standalone) + " standalone detections, " +
             std::to_string(overlapping) + " detections on " +
             std::to_string(occurrences) + " embedded distractors, precision " +
             Fmt(p, 4);
  return o;
}

Outcome Ordering(const std::filesystem::path& bench) {
  const auto rows = ReadReport(bench / "report.tsv");
  const Row s = rows.at("synthesized"), c = rows.at("community"),
            b = rows.at("bespoke");
  Outcome o;
  o.pass = s.precision > c.precision && b.recall >= c.recall;
  o.detail = "precision synthesized " + Fmt(s.precision, 4) + " vs community " +
             Fmt(c.precision, 4) + "; recall bespoke " + Fmt(b.recall, 4) +
             " vs community " + Fmt(c.recall, 4);
  return o;
}

Outcome Determinism(const std::filesystem::path& first) {
  TempDir again("bench-b");
  ds::cli::BenchConfig cfg;
  cfg.out_dir = again.path().string();
  ds::cli::RunBench(cfg);
  std::size_t files = 0;
  std::string differing;
  for (const auto& entry : std::filesystem::directory_iterator(first)) {
    ++files;
    const auto name = entry.path().filename();
    if (Slurp(entry.path()) != Slurp(again.path() / name)) {
      differing += (differing.empty() ? "" : ",") + name.string();
    }
  }
  std::size_t second = 0;
  for ([[maybe_unused]] const auto& e :
       std::filesystem::directory_iterator(again.path())) {
    ++second;
  }
  Outcome o;
  o.pass = differing.empty() && files == second && files >= 9;
  o.detail = std::to_string(files) + " files compared";
  if (!differing.empty()) o.detail += ", differing: " + differing;
  return o;
}

Outcome VerbatimCommunity() {
  const auto bank = ds::builtin_community_bank();
  const auto it = std::find_if(bank.entries.begin(), bank.entries.end(),
                               [](const ds::RegexEntry& e) {
                                 return e.label == "generated-dmy";
                               });
  if (it == bank.entries.end()) return {false, "entry missing"};
  const std::string expected =
      "(\\d{1,2}[-\\./](0?[1-9]|1[012])[-\\./]((19|20)\\d{2}))";
  const ds::Regex re(it->pattern);
  Outcome o;
  o.pass = it->pattern == expected && re.FullMatch("01/02/2001") &&
           !re.FullMatch("01/02/98");
  o.detail = "pattern " + it->pattern + ", 01/02/2001 " +
             (re.FullMatch("01/02/2001") ? "matches" : "rejected") +
             ", 01/02/98 " + (re.FullMatch("01/02/98") ? "matches" : "rejected");
  return o;
}

Outcome Preprocessing() {
  const std::string once = ds::preprocess_text("3rd of June to the 2nd of July");
  Outcome o;
  o.pass = once == "3rd June - 2nd July" && ds::preprocess_text(once) == once;
  o.detail = "\"" + once + "\"";
  return o;
}

}  // namespace

int main() {
  Run("epoch oracle equivalence", EpochOracle);
  Run("round-trip completeness", RoundTrip);
  Run("synthesis soundness and minimality", SoundnessMinimality);

  TempDir bench("bench-a");
  bool bench_ok = true;
  try {
    ds::cli::BenchConfig cfg;
    cfg.out_dir = bench.path().string();
    std::cout << ds::cli::RunBench(cfg);
  } catch (const std::exception& e) {
    bench_ok = false;
    Report("bench run", {false, e.what()});
  }
  if (bench_ok) {
    Run("semantic-validation precision", [&] { return Distractors(bench.path()); });
    Run("qualitative ordering", [&] { return Ordering(bench.path()); });
    Run("determinism", [&] { return Determinism(bench.path()); });
  }
  Run("verbatim community regex", VerbatimCommunity);
  Run("preprocessing", Preprocessing);

  std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed: ")
            << (g_failures == 0 ? "" : std::to_string(g_failures)) << std::endl;
  return g_failures == 0 ? 0 : 1;
}
