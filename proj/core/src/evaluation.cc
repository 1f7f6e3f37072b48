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

#include "datesynth/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace datesynth {

namespace {

bool Pairs(const Detection& d, const Annotation& a, MatchMode mode) {
  if (mode == MatchMode::kTimestamp) {
    return d.range && d.range->start == a.start && d.range->end == a.end;
  }
  return a.span && d.span.Overlaps(*a.span);
}

void SortRows(std::vector<BankResult>& rows) {
  if (rows.empty()) throw std::invalid_argument("report needs at least one bank");
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BankResult& a, const BankResult& b) {
                     if (a.provenance != b.provenance) {
                       return a.provenance < b.provenance;
                     }
                     return a.mode < b.mode;
                   });
}

}  // namespace

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

std::string_view ToString(MatchMode mode) {
  return mode == MatchMode::kTimestamp ? "timestamp" : "span";
}

std::optional<MatchMode> ParseMatchMode(std::string_view text) {
  if (text == "timestamp") return MatchMode::kTimestamp;
  if (text == "span") return MatchMode::kSpan;
  return std::nullopt;
}

ConfusionMatrix match_detections(const std::vector<Detection>& detections,
                                 const std::vector<Annotation>& annotations,
                                 MatchMode mode) {
  std::map<std::string, std::vector<const Annotation*>> by_page;
  for (const auto& a : annotations) by_page[a.page_id].push_back(&a);
  std::map<const Annotation*, bool> used;

  ConfusionMatrix cm;
  for (const auto& d : detections) {
    bool matched = false;
    const auto it = by_page.find(d.page_id);
    if (it != by_page.end()) {
      for (const Annotation* a : it->second) {
        if (used[a] || !Pairs(d, *a, mode)) continue;
        used[a] = true;
        matched = true;
        break;
      }
    }
    if (matched) {
      ++cm.tp;
    } else {
      ++cm.fp;
    }
  }
  cm.fn = annotations.size() - cm.tp;
  return cm;
}

std::optional<double> precision(const ConfusionMatrix& cm) {
  if (cm.tp + cm.fp == 0) return std::nullopt;
  return static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
}

std::optional<double> recall(const ConfusionMatrix& cm) {
  if (cm.tp + cm.fn == 0) return std::nullopt;
  return static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
}

std::string FormatMetric(std::optional<double> value) {
  if (!value) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *value);
  return buf;
}

std::string report_text(std::vector<BankResult> results) {
  SortRows(results);
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %-9s %8s %8s %8s %9s %9s\n", "bank",
                "mode", "tp", "fp", "fn", "precision", "recall");
  out += line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof(line), "%-12s %-9s %8zu %8zu %8zu %9s %9s\n",
                  std::string(ToString(r.provenance)).c_str(),
                  std::string(ToString(r.mode)).c_str(), r.cm.tp, r.cm.fp,
                  r.cm.fn, FormatMetric(precision(r.cm)).c_str(),
                  FormatMetric(recall(r.cm)).c_str());
    out += line;
  }
  return out;
}

std::string report_tsv(std::vector<BankResult> results) {
  SortRows(results);
  std::string out = "bank\tmode\ttp\tfp\tfn\tprecision\trecall\n";
  for (const auto& r : results) {
    out += std::string(ToString(r.provenance)) + '\t' +
           std::string(ToString(r.mode)) + '\t' + std::to_string(r.cm.tp) +
           '\t' + std::to_string(r.cm.fp) + '\t' + std::to_string(r.cm.fn) +
           '\t' + FormatMetric(precision(r.cm)) + '\t' +
           FormatMetric(recall(r.cm)) + '\n';
  }
  return out;
}

}  // namespace datesynth
