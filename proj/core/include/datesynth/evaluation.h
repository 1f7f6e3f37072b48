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

#ifndef DATESYNTH_EVALUATION_H_
#define DATESYNTH_EVALUATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datesynth/bank.h"
#include "datesynth/document.h"
#include "datesynth/extraction.h"

namespace datesynth {

// No true negatives: there is no countable set of "non-dates" on a page.
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  ConfusionMatrix& operator+=(const ConfusionMatrix& other);
  bool operator==(const ConfusionMatrix&) const = default;
};

enum class MatchMode {
  // Equal start and end timestamps.
  kTimestamp,
  // Overlapping spans; for banks that locate dates without reading them.
  kSpan,
};

std::string_view ToString(MatchMode mode);
std::optional<MatchMode> ParseMatchMode(std::string_view text);

// Greedy one-to-one pairing per page, in input order. In span mode an
// annotation without a span never matches.
ConfusionMatrix match_detections(const std::vector<Detection>& detections,
                                 const std::vector<Annotation>& annotations,
                                 MatchMode mode = MatchMode::kTimestamp);

// nullopt when the denominator is zero.
std::optional<double> precision(const ConfusionMatrix& cm);
std::optional<double> recall(const ConfusionMatrix& cm);

// Four decimals, or "n/a".
std::string FormatMetric(std::optional<double> value);

struct BankResult {
  Provenance provenance = Provenance::kSynthesized;
  MatchMode mode = MatchMode::kTimestamp;
  ConfusionMatrix cm;
};

// Rows sorted by provenance, then mode.
std::string report_text(std::vector<BankResult> results);
std::string report_tsv(std::vector<BankResult> results);

}  // namespace datesynth

#endif  // DATESYNTH_EVALUATION_H_
