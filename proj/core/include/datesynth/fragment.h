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

#ifndef DATESYNTH_FRAGMENT_H_
#define DATESYNTH_FRAGMENT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace datesynth {

enum class FragmentKind {
  kLiteral,
  kCharSet,
  kAnyDigit,
  kAnyAlpha,
  kNumericRange,
  kAlternation,
  kOptional,
  kConcat,
};

// One node of the synthesis hypothesis space. Fragments are plain values;
// composite kinds own their children.
//
// NumericRange(lo, hi, padded) denotes the decimal spellings of every
// integer in [lo, hi] without leading zeros, plus, when padded, the two
// digit "0d" spelling of each single digit value.
class Fragment {
 public:
  static Fragment Literal(std::string text);
  static Fragment CharSet(std::string chars);
  static Fragment AnyDigit(int min, int max);
  static Fragment AnyAlpha(int min, int max);
  static Fragment NumericRange(std::int64_t lo, std::int64_t hi, bool padded);
  static Fragment Alternation(std::vector<Fragment> branches);
  static Fragment Optional(Fragment child);
  static Fragment Concat(std::vector<Fragment> parts);

  FragmentKind kind() const { return kind_; }
  const std::string& text() const { return text_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  bool padded() const { return padded_; }
  const std::vector<Fragment>& children() const { return children_; }

  // Node count of the expression tree.
  int size() const;

  // Portable-dialect regex source.
  std::string Serialize() const;

  // Direct tree membership test, independent of the regex engine.
  bool Matches(std::string_view text) const;

  // Distinct strings of each length 0..max_len. Exact when alternation
  // branches are disjoint and concatenations are unambiguous, which holds
  // for every fragment the synthesiser builds.
  std::vector<long double> CountByLength(int max_len) const;

  // Number of distinct strings of length <= max_len.
  long double LanguageSize(int max_len) const;

  bool operator==(const Fragment& other) const;

 private:
  Fragment() = default;

  void Ends(std::string_view text, std::size_t pos,
            std::vector<std::size_t>& out) const;

  FragmentKind kind_ = FragmentKind::kLiteral;
  std::string text_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  bool padded_ = false;
  std::vector<Fragment> children_;
};

// Regex source for the decimal range [lo, hi] (see Fragment::NumericRange).
std::string NumericRangeRegex(std::int64_t lo, std::int64_t hi, bool padded);

std::string EscapeLiteral(std::string_view text);

}  // namespace datesynth

#endif  // DATESYNTH_FRAGMENT_H_
