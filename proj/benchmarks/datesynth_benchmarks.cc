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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "datesynth/calendar.h"
#include "datesynth/corpus.h"
#include "datesynth/extraction.h"
#include "datesynth/fragment.h"
#include "datesynth/preprocess.h"
#include "datesynth/regex.h"
#include "datesynth/synthesis.h"

namespace ds = datesynth;

namespace {

ds::GenerationConfig Window(int first_year, int last_year) {
  ds::GenerationConfig cfg;
  cfg.start_date = {first_year, 1, 1};
  cfg.end_date = {last_year, 12, 31};
  return cfg;
}

void BM_CivilToEpoch(benchmark::State& state) {
  const auto days = ds::enumerate_days({1900, 1, 1}, {2100, 12, 31});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ds::civil_to_epoch_midnight(days[i]));
    if (++i == days.size()) i = 0;
  }
}
BENCHMARK(BM_CivilToEpoch);

void BM_EpochToCivil(benchmark::State& state) {
  ds::Seconds ts = ds::civil_to_epoch_midnight({1900, 1, 1});
  const ds::Seconds last = ds::civil_to_epoch_midnight({2100, 12, 31});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ds::epoch_to_civil(ts));
    ts = ts == last ? ds::civil_to_epoch_midnight({1900, 1, 1})
                    : ts + ds::kSecondsPerDay;
  }
}
BENCHMARK(BM_EpochToCivil);

void BM_Preprocess(benchmark::State& state) {
  const std::string text =
      "seen on the 3rd of June to the 2nd of July, and again 11th of June, 96";
  for (auto _ : state) benchmark::DoNotOptimize(ds::preprocess_text(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Preprocess);

void BM_LanguageSize(benchmark::State& state) {
  const ds::Fragment f = ds::Fragment::Concat(
      {ds::Fragment::Optional(ds::Fragment::Concat(
           {ds::Fragment::NumericRange(1, 31, true), ds::Fragment::CharSet("-./")})),
       ds::Fragment::NumericRange(1, 12, true), ds::Fragment::CharSet("-./"),
       ds::Fragment::NumericRange(1900, 2100, false)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.LanguageSize(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_LanguageSize)->Arg(16)->Arg(64);

void BM_Synthesize(benchmark::State& state) {
  const ds::Corpus corpus =
      ds::build_training_corpus(Window(1970, 1970 + static_cast<int>(state.range(0)) - 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ds::synthesize_bank(corpus, ds::CostParams{}));
  }
  state.counters["examples"] = static_cast<double>(corpus.size());
}
BENCHMARK(BM_Synthesize)->Arg(1)->Unit(benchmark::kMillisecond);

const ds::CompiledBank& Bank() {
  static const ds::CompiledBank bank(
      ds::synthesize_bank(ds::build_training_corpus(Window(1970, 1970)),
                          ds::CostParams{}));
  return bank;
}

void BM_MatchEnds(benchmark::State& state) {
  const ds::Regex& re = Bank().regex(0);
  const std::string text = "01-02/01/1970 and more";
  ds::Regex::Scratch scratch;
  std::vector<std::size_t> ends;
  for (auto _ : state) {
    re.MatchEnds(text, 0, scratch, ends);
    benchmark::DoNotOptimize(ends.data());
  }
}
BENCHMARK(BM_MatchEnds);

void BM_ScanPage(benchmark::State& state) {
  const ds::EvaluationCorpus ev =
      ds::inject_noise(ds::build_training_corpus(Window(1970, 1970)), 20240501);
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < 200; ++i) bytes += ev.pages[i].preprocessed_text.size();
  for (auto _ : state) {
    for (std::size_t i = 0; i < 200; ++i) {
      benchmark::DoNotOptimize(ds::scan_page(ev.pages[i], Bank()));
    }
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_ScanPage)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
