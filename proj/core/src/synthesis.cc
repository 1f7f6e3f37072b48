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

#include "datesynth/synthesis.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "datesynth/preprocess.h"
#include "datesynth/regex.h"

namespace datesynth {

namespace {

constexpr double kTieTolerance = 1e-9;

struct Region {
  std::size_t first;
  std::size_t last;
  int group;
};

std::vector<Region> RegionsOf(const std::vector<ColumnSpec>& columns) {
  std::vector<Region> out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (!out.empty() && out.back().group == columns[c].optional_group &&
        out.back().last == c) {
      out.back().last = c + 1;
    } else {
      out.push_back({c, c + 1, columns[c].optional_group});
    }
  }
  return out;
}

bool Better(double cost, const std::string& text, double best_cost,
            const std::string& best_text) {
  if (cost < best_cost - kTieTolerance) return true;
  if (cost > best_cost + kTieTolerance) return false;
  return text < best_text;
}

std::string EdgeSource(const DagEdge& e) {
  return e.epsilon ? std::string() : e.fragment.Serialize();
}

struct Markers {
  std::vector<std::string> at;  // per node: closers then openers
};

Markers MarkersOf(const SynthesisDag& dag) {
  Markers m;
  m.at.assign(dag.node_count, "");
  std::vector<std::string> open(dag.node_count), close(dag.node_count);
  for (const auto& [first, last] : dag.optional_regions) {
    open[first] += "(";
    close[last] += ")?";
  }
  for (std::size_t i = 0; i < dag.node_count; ++i) m.at[i] = close[i] + open[i];
  return m;
}

Fragment LiteralChoice(const std::vector<std::string>& values) {
  if (values.size() == 1) return Fragment::Literal(values.front());
  std::vector<Fragment> branches;
  branches.reserve(values.size());
  for (const auto& v : values) branches.push_back(Fragment::Literal(v));
  return Fragment::Alternation(std::move(branches));
}

}  // namespace

void CostParams::Validate() const {
  if (!(lambda >= 0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be a finite nonnegative number");
  }
  if (max_len < 1 || max_len > 256) {
    throw std::invalid_argument("max_len must lie in [1, 256]");
  }
}

Cluster::Cluster(Family family, bool keep_texts)
    : family_(family),
      keep_texts_(keep_texts),
      columns_(schema_for(family).columns),
      column_values_(columns_.size()),
      absent_(columns_.size(), false) {}

std::vector<TokenKind> Cluster::shape() const {
  std::vector<TokenKind> kinds;
  for (const auto& c : columns_) kinds.push_back(c.kind);
  return kinds;
}

const std::set<std::string>* Cluster::span_values(std::size_t first,
                                                  std::size_t last) const {
  const auto it = spans_.find({first, last});
  if (it == spans_.end()) return nullptr;
  return &it->second;
}

void Cluster::Add(const ColumnValues& values, std::string_view text) {
  if (values.size() != columns_.size()) {
    throw std::invalid_argument("column count does not match the cluster");
  }
  ++count_;
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (values[c]) {
      column_values_[c].insert(*values[c]);
    } else {
      absent_[c] = true;
    }
  }
  for (const Region& r : RegionsOf(columns_)) {
    for (std::size_t i = r.first; i < r.last; ++i) {
      if (!values[i]) continue;
      std::string joined = *values[i];
      for (std::size_t j = i + 1; j < r.last; ++j) {
        if (!values[j]) break;
        joined += *values[j];
        const std::pair<std::size_t, std::size_t> key{i, j + 1};
        if (overflowed_.count(key)) continue;
        auto& set = spans_[key];
        set.insert(joined);
        if (set.size() > kMaxSpanValues) {
          spans_.erase(key);
          overflowed_.insert(key);
        }
      }
    }
  }
  if (keep_texts_) texts_.emplace_back(text);
}

std::string synthesis_text(const RenderedExample& example) {
  return preprocess_text(example.text);
}

void ClusterAccumulator::Add(const RenderedExample& example) {
  const std::string text = synthesis_text(example);
  const FamilySchema& schema = schema_for(example.family);
  const auto values = align_columns(schema, tokenize(text));
  if (!values) {
    throw std::invalid_argument("example '" + example.text +
                                "' does not fit the " +
                                std::string(ToString(example.family)) +
                                " shape");
  }
  std::vector<TokenKind> kinds;
  for (const auto& c : schema.columns) kinds.push_back(c.kind);
  auto key = std::make_pair(example.family, std::move(kinds));
  auto it = clusters_.find(key);
  if (it == clusters_.end()) {
    it = clusters_.emplace(key, Cluster(example.family, keep_texts_)).first;
  }
  it->second.Add(*values, text);
  ++count_;
}

std::vector<Cluster> ClusterAccumulator::Finish() && {
  std::vector<Cluster> out;
  out.reserve(clusters_.size());
  for (auto& [key, cluster] : clusters_) out.push_back(std::move(cluster));
  clusters_.clear();
  return out;
}

std::vector<Cluster> cluster_by_shape(
    const std::vector<RenderedExample>& examples) {
  ClusterAccumulator acc;
  for (const auto& ex : examples) acc.Add(ex);
  return std::move(acc).Finish();
}

std::vector<Fragment> candidate_fragments(
    const std::vector<std::string>& column_values, TokenKind kind) {
  if (column_values.empty()) {
    throw std::invalid_argument("candidate_fragments: no values");
  }
  std::vector<std::string> values = column_values;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (const auto& v : values) {
    const auto tokens = tokenize(v);
    if (tokens.size() != 1 || tokens.front().kind != kind) {
      throw std::invalid_argument("candidate_fragments: '" + v +
                                  "' is not a single " + ToString(kind) +
                                  " token");
    }
  }

  std::vector<Fragment> out;
  out.push_back(LiteralChoice(values));
  std::size_t min_len = values.front().size();
  std::size_t max_len = min_len;
  for (const auto& v : values) {
    min_len = std::min(min_len, v.size());
    max_len = std::max(max_len, v.size());
  }
  switch (kind) {
    case TokenKind::kDigits: {
      out.push_back(Fragment::AnyDigit(static_cast<int>(min_len),
                                       static_cast<int>(max_len)));
      if (max_len <= 18) {
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = 0;
        bool padded = false;
        for (const auto& v : values) {
          const std::int64_t n = std::stoll(v);
          lo = std::min(lo, n);
          hi = std::max(hi, n);
          if (v.size() > 1 && v.front() == '0') padded = true;
        }
        out.push_back(Fragment::NumericRange(lo, hi, padded));
      }
      break;
    }
    case TokenKind::kAlpha:
      out.push_back(Fragment::AnyAlpha(static_cast<int>(min_len),
                                       static_cast<int>(max_len)));
      break;
    case TokenKind::kPunct:
      if (values.size() > 1) {
        std::string chars;
        for (const auto& v : values) chars += v;
        out.push_back(Fragment::CharSet(chars));
      }
      break;
  }
  std::sort(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) {
    return a.Serialize() < b.Serialize();
  });
  return out;
}

double fragment_cost(const Fragment& fragment,
                     const std::vector<std::string>& column_values,
                     const CostParams& params) {
  for (const auto& v : column_values) {
    if (!fragment.Matches(v)) return kInfiniteCost;
  }
  const long double u = std::max(1.0L, fragment.LanguageSize(params.max_len));
  return static_cast<double>(fragment.size()) +
         params.lambda * static_cast<double>(std::log2(u));
}

Fragment best_fragment(const std::vector<std::string>& column_values,
                       TokenKind kind, const CostParams& params) {
  const auto candidates = candidate_fragments(column_values, kind);
  std::size_t best = 0;
  double best_cost = kInfiniteCost;
  std::string best_text;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double cost = fragment_cost(candidates[i], column_values, params);
    if (!std::isfinite(cost)) continue;
    const std::string text = candidates[i].Serialize();
    if (!std::isfinite(best_cost) || Better(cost, text, best_cost, best_text)) {
      best = i;
      best_cost = cost;
      best_text = text;
    }
  }
  return candidates[best];
}

SynthesisDag build_dag(const Cluster& cluster, const CostParams& params) {
  params.Validate();
  SynthesisDag dag;
  const auto& columns = cluster.columns();
  dag.node_count = columns.size() + 1;
  for (const Region& r : RegionsOf(columns)) {
    bool any_present = false;
    bool sometimes_absent = false;
    for (std::size_t c = r.first; c < r.last; ++c) {
      any_present = any_present || !cluster.column_values(c).empty();
      sometimes_absent = sometimes_absent || cluster.column_sometimes_absent(c);
    }
    if (!any_present) {
      DagEdge e;
      e.from = r.first;
      e.to = r.last;
      e.epsilon = true;
      dag.edges.push_back(std::move(e));
      continue;
    }
    if (r.group >= 0 && sometimes_absent) {
      dag.optional_regions.emplace_back(r.first, r.last);
    }
    for (std::size_t c = r.first; c < r.last; ++c) {
      const auto& set = cluster.column_values(c);
      const std::vector<std::string> values(set.begin(), set.end());
      for (auto& f : candidate_fragments(values, columns[c].kind)) {
        const double cost = fragment_cost(f, values, params);
        if (!std::isfinite(cost)) continue;
        dag.edges.push_back({c, c + 1, std::move(f), cost, false});
      }
    }
    for (std::size_t i = r.first; i < r.last; ++i) {
      for (std::size_t j = i + 2; j <= r.last; ++j) {
        const auto* set = cluster.span_values(i, j);
        if (set == nullptr) continue;
        const std::vector<std::string> values(set->begin(), set->end());
        Fragment f = LiteralChoice(values);
        const double cost = fragment_cost(f, values, params);
        dag.edges.push_back({i, j, std::move(f), cost, false});
      }
    }
  }
  std::stable_sort(dag.edges.begin(), dag.edges.end(),
                   [](const DagEdge& a, const DagEdge& b) {
                     return std::tie(a.from, a.to) < std::tie(b.from, b.to);
                   });
  return dag;
}

DagPath shortest_path(const SynthesisDag& dag) {
  if (dag.node_count == 0) throw std::invalid_argument("empty DAG");
  const Markers markers = MarkersOf(dag);
  const std::size_t sink = dag.node_count - 1;
  std::vector<double> cost(dag.node_count, kInfiniteCost);
  std::vector<std::string> text(dag.node_count);
  std::vector<std::ptrdiff_t> choice(dag.node_count, -1);
  cost[sink] = 0;
  text[sink] = markers.at[sink];
  for (std::size_t node = sink; node-- > 0;) {
    for (std::size_t k = 0; k < dag.edges.size(); ++k) {
      const DagEdge& e = dag.edges[k];
      if (e.from != node || !std::isfinite(cost[e.to])) continue;
      const double c = e.cost + cost[e.to];
      std::string t = markers.at[node] + EdgeSource(e) + text[e.to];
      if (choice[node] < 0 || Better(c, t, cost[node], text[node])) {
        cost[node] = c;
        text[node] = std::move(t);
        choice[node] = static_cast<std::ptrdiff_t>(k);
      }
    }
  }
  if (choice[0] < 0 && sink != 0) {
    throw std::logic_error("synthesis DAG has no source-to-sink path");
  }
  DagPath path;
  path.cost = cost[0];
  path.serialized = text[0];
  for (std::size_t node = 0; node != sink;) {
    const auto k = static_cast<std::size_t>(choice[node]);
    path.edges.push_back(k);
    node = dag.edges[k].to;
  }
  return path;
}

std::vector<DagPath> enumerate_paths(const SynthesisDag& dag) {
  const Markers markers = MarkersOf(dag);
  const std::size_t sink = dag.node_count - 1;
  std::vector<DagPath> out;
  DagPath current;
  std::function<void(std::size_t)> walk = [&](std::size_t node) {
    if (node == sink) {
      DagPath p = current;
      p.serialized += markers.at[sink];
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t k = 0; k < dag.edges.size(); ++k) {
      const DagEdge& e = dag.edges[k];
      if (e.from != node) continue;
      const DagPath saved = current;
      current.edges.push_back(k);
      current.cost += e.cost;
      current.serialized += markers.at[node] + EdgeSource(e);
      walk(e.to);
      current = saved;
    }
  };
  walk(0);
  return out;
}

Fragment assemble(const SynthesisDag& dag, const DagPath& path) {
  std::vector<Fragment> pieces;
  std::vector<Fragment> region;
  std::ptrdiff_t open_region = -1;
  auto region_of = [&](std::size_t node) -> std::ptrdiff_t {
    for (std::size_t r = 0; r < dag.optional_regions.size(); ++r) {
      const auto& [first, last] = dag.optional_regions[r];
      if (node >= first && node < last) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
  };
  auto flush = [&]() {
    if (open_region >= 0 && !region.empty()) {
      pieces.push_back(Fragment::Optional(Fragment::Concat(std::move(region))));
    }
    region.clear();
    open_region = -1;
  };
  for (std::size_t k : path.edges) {
    const DagEdge& e = dag.edges[k];
    const std::ptrdiff_t r = region_of(e.from);
    if (r != open_region) flush();
    if (e.epsilon) continue;
    if (r >= 0) {
      open_region = r;
      region.push_back(e.fragment);
    } else {
      pieces.push_back(e.fragment);
    }
  }
  flush();
  if (pieces.empty()) throw std::logic_error("path assembles to nothing");
  return Fragment::Concat(std::move(pieces));
}

SynthesisResult synthesize_cluster(const Cluster& cluster,
                                   const CostParams& params) {
  if (cluster.size() == 0) {
    throw std::invalid_argument("synthesize_cluster: empty cluster");
  }
  const SynthesisDag dag = build_dag(cluster, params);
  const DagPath path = shortest_path(dag);
  SynthesisResult result{{}, assemble(dag, path), path.cost, 0};
  result.entry.pattern = result.pattern.Serialize();
  if (result.entry.pattern != path.serialized) {
    throw std::logic_error("assembled pattern disagrees with the DAG path");
  }
  const Regex compiled(result.entry.pattern);
  for (const auto& text : cluster.texts()) {
    if (!compiled.FullMatch(text)) {
      throw std::logic_error("synthesised pattern " + result.entry.pattern +
                             " misses '" + text + "'");
    }
  }
  result.entry.extraction_map = schema_for(cluster.family()).extraction_map;
  result.entry.label = std::string(ToString(cluster.family()));
  result.specificity = result.pattern.LanguageSize(kSpecificityLength);
  return result;
}

RegexBank synthesize_bank(std::vector<Cluster> clusters,
                          const CostParams& params) {
  std::vector<SynthesisResult> results;
  results.reserve(clusters.size());
  for (const auto& c : clusters) results.push_back(synthesize_cluster(c, params));
  std::stable_sort(results.begin(), results.end(),
                   [](const SynthesisResult& a, const SynthesisResult& b) {
                     if (a.specificity != b.specificity) {
                       return a.specificity < b.specificity;
                     }
                     return a.entry.pattern < b.entry.pattern;
                   });
  RegexBank bank;
  bank.provenance = Provenance::kSynthesized;
  for (std::size_t i = 0; i < results.size(); ++i) {
    results[i].entry.priority = static_cast<int>(i);
    bank.entries.push_back(std::move(results[i].entry));
  }
  return bank;
}

RegexBank synthesize_bank(const Corpus& corpus, const CostParams& params) {
  ClusterAccumulator acc;
  for (const auto& f : corpus.families) {
    for (const auto& ex : f.examples) acc.Add(ex);
  }
  return synthesize_bank(std::move(acc).Finish(), params);
}

}  // namespace datesynth
