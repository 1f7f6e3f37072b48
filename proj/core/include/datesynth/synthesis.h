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

// Regex synthesis from positive examples. Examples of one shape are laid
// out as token columns; a DAG over the column boundaries carries one edge
// per candidate fragment (single columns, plus literal spans over several
// columns) and the cheapest path under an MDL-style cost becomes the
// pattern.

#ifndef DATESYNTH_SYNTHESIS_H_
#define DATESYNTH_SYNTHESIS_H_

#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "datesynth/bank.h"
#include "datesynth/corpus.h"
#include "datesynth/fragment.h"
#include "datesynth/token.h"

namespace datesynth {

struct CostParams {
  // Weight of the generality term.
  double lambda = 1.0;
  // Strings longer than this are not counted in a fragment's language.
  int max_len = 16;

  void Validate() const;
};

// Examples of one family sharing one column layout, summarised by what the
// synthesiser needs: the distinct values seen in each column and in each
// multi-column literal span.
class Cluster {
 public:
  // Spans with more distinct joined values than this get no literal edge.
  static constexpr std::size_t kMaxSpanValues = 64;

  Cluster(Family family, bool keep_texts);

  Family family() const { return family_; }
  const std::vector<ColumnSpec>& columns() const { return columns_; }
  std::vector<TokenKind> shape() const;
  std::size_t size() const { return count_; }

  const std::set<std::string>& column_values(std::size_t column) const {
    return column_values_[column];
  }
  // True when some example leaves the column's optional group empty.
  bool column_sometimes_absent(std::size_t column) const {
    return absent_[column];
  }
  // Joined values of columns [first, last); nullptr when the span
  // overflowed kMaxSpanValues or is not tracked.
  const std::set<std::string>* span_values(std::size_t first,
                                           std::size_t last) const;

  // Synthesis texts of the member examples (empty unless keep_texts).
  const std::vector<std::string>& texts() const { return texts_; }

  void Add(const ColumnValues& values, std::string_view text);

 private:
  Family family_;
  bool keep_texts_;
  std::vector<ColumnSpec> columns_;
  std::vector<std::set<std::string>> column_values_;
  std::vector<bool> absent_;
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> spans_;
  std::set<std::pair<std::size_t, std::size_t>> overflowed_;
  std::vector<std::string> texts_;
  std::size_t count_ = 0;
};

// The text the synthesiser and the scanner see for an example.
std::string synthesis_text(const RenderedExample& example);

// Streaming clustering for corpora too large to hold in memory.
class ClusterAccumulator {
 public:
  explicit ClusterAccumulator(bool keep_texts = true)
      : keep_texts_(keep_texts) {}

  // Throws std::invalid_argument when the example does not fit its
  // family's shape.
  void Add(const RenderedExample& example);
  std::size_t size() const { return count_; }

  // Clusters in canonical order: family, then shape.
  std::vector<Cluster> Finish() &&;

 private:
  bool keep_texts_;
  std::size_t count_ = 0;
  std::map<std::pair<Family, std::vector<TokenKind>>, Cluster> clusters_;
};

std::vector<Cluster> cluster_by_shape(
    const std::vector<RenderedExample>& examples);

// Candidate fragments for one column, sorted by serialised form. Throws
// std::invalid_argument when the values are empty or not all a single
// token of |kind|.
std::vector<Fragment> candidate_fragments(
    const std::vector<std::string>& column_values, TokenKind kind);

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

// size + lambda * log2(U) where U, the bounded language size, is floored
// at 1. +infinity when the fragment misses a value.
double fragment_cost(const Fragment& fragment,
                     const std::vector<std::string>& column_values,
                     const CostParams& params);

// Cheapest single-column fragment, ties broken by serialised form.
Fragment best_fragment(const std::vector<std::string>& column_values,
                       TokenKind kind, const CostParams& params);

struct DagEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Fragment fragment = Fragment::Literal("?");
  double cost = 0;
  bool epsilon = false;  // stands in for a never-present optional region
};

struct SynthesisDag {
  std::size_t node_count = 0;
  std::vector<DagEdge> edges;
  // Optional regions [first, last) over column boundaries, wrapped on
  // assembly.
  std::vector<std::pair<std::size_t, std::size_t>> optional_regions;
};

struct DagPath {
  std::vector<std::size_t> edges;  // indices into SynthesisDag::edges
  double cost = 0;
  std::string serialized;
};

SynthesisDag build_dag(const Cluster& cluster, const CostParams& params);

// Minimum total cost path, ties broken by the lexicographically smallest
// serialised pattern.
DagPath shortest_path(const SynthesisDag& dag);

// Every source-to-sink path; exponential, for verification.
std::vector<DagPath> enumerate_paths(const SynthesisDag& dag);

Fragment assemble(const SynthesisDag& dag, const DagPath& path);

struct SynthesisResult {
  RegexEntry entry;
  Fragment pattern = Fragment::Literal("?");
  double cost = 0;
  // Language size bounded at kSpecificityLength, used for bank ordering.
  long double specificity = 0;
};

inline constexpr int kSpecificityLength = 64;

// Throws std::invalid_argument on an empty cluster, std::logic_error if the
// result fails to match a retained cluster text.
SynthesisResult synthesize_cluster(const Cluster& cluster,
                                   const CostParams& params);

RegexBank synthesize_bank(std::vector<Cluster> clusters,
                          const CostParams& params);
RegexBank synthesize_bank(const Corpus& corpus, const CostParams& params);

}  // namespace datesynth

#endif  // DATESYNTH_SYNTHESIS_H_
