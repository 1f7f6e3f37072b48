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

#ifndef DATESYNTH_REGEX_H_
#define DATESYNTH_REGEX_H_

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace datesynth {

class RegexSyntaxError : public std::invalid_argument {
 public:
  RegexSyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

using CharClass = std::bitset<256>;

// A compiled pattern in the portable dialect: literals, escapes (\d \w \s
// and escaped metacharacters), character sets, '.', grouping with '(' or
// "(?:", alternation, and the quantifiers ? * + {m} {m,} {m,n}. Anchors and
// backreferences are not part of the dialect.
//
// Matching is a Thompson NFA simulation, so every end position reachable
// from a start is found in one left-to-right pass. A Regex is immutable
// after construction and safe to share between threads; per-call state
// lives in a Scratch.
class Regex {
 public:
  class Scratch {
   public:
    Scratch() = default;

   private:
    friend class Regex;
    std::vector<int> current_;
    std::vector<int> next_;
    std::vector<int> stack_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t generation_ = 0;
  };

  explicit Regex(std::string_view pattern);

  const std::string& pattern() const { return pattern_; }

  // Characters that can begin a non-empty match.
  const CharClass& first_chars() const { return first_; }

  // Every end offset e > start such that text[start, e) is in the language,
  // ascending.
  void MatchEnds(std::string_view text, std::size_t start, Scratch& scratch,
                 std::vector<std::size_t>& ends) const;

  bool FullMatch(std::string_view text) const;

  // True when some string of the language starts with prefix.
  bool IsViablePrefix(std::string_view prefix) const;

 private:
  struct State {
    enum Type : std::uint8_t { kChar, kSplit, kMatch };
    Type type = kMatch;
    int out = -1;
    int out1 = -1;
    CharClass chars;
  };

  friend class RegexCompiler;

  void AddState(int state, std::uint32_t generation, Scratch& scratch,
                std::vector<int>& list) const;

  std::string pattern_;
  std::vector<State> states_;
  int start_ = 0;
  CharClass first_;
};

}  // namespace datesynth

#endif  // DATESYNTH_REGEX_H_
