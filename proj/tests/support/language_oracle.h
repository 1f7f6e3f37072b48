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

// Exhaustive language counting for fragments. Characters that no leaf of
// the fragment can tell apart are grouped into classes; strings over class
// representatives are enumerated depth first, dead prefixes are pruned
// with the regex engine, and each accepted string is weighted by the
// product of its class sizes.

#ifndef DATESYNTH_TESTS_LANGUAGE_ORACLE_H_
#define DATESYNTH_TESTS_LANGUAGE_ORACLE_H_

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "datesynth/fragment.h"
#include "datesynth/regex.h"

namespace datesynth::testing {

struct CharClass {
  char representative;
  long double size;
};

inline void CollectMentioned(const Fragment& f, std::set<char>& chars,
                             bool& digits_split) {
  switch (f.kind()) {
    case FragmentKind::kLiteral:
    case FragmentKind::kCharSet:
      chars.insert(f.text().begin(), f.text().end());
      break;
    case FragmentKind::kNumericRange:
      digits_split = true;
      break;
    default:
      break;
  }
  for (const auto& c : f.children()) CollectMentioned(c, chars, digits_split);
}

inline std::vector<CharClass> ClassesOf(const Fragment& f) {
  std::set<char> mentioned;
  bool digits_split = false;
  CollectMentioned(f, mentioned, digits_split);
  if (digits_split) {
    for (char d = '0'; d <= '9'; ++d) mentioned.insert(d);
  }
  std::vector<CharClass> out;
  for (char c : mentioned) out.push_back({c, 1});
  char digit_rep = 0, alpha_rep = 0;
  long double digits = 0, letters = 0;
  for (int c = 0; c < 256; ++c) {
    const char ch = static_cast<char>(c);
    if (mentioned.count(ch)) continue;
    if (std::isdigit(c)) {
      if (!digit_rep) digit_rep = ch;
      ++digits;
    } else if (std::isalpha(c)) {
      if (!alpha_rep) alpha_rep = ch;
      ++letters;
    }
  }
  if (digit_rep) out.push_back({digit_rep, digits});
  if (alpha_rep) out.push_back({alpha_rep, letters});
  return out;
}

// Per-length counts, lengths 0..max_len.
inline std::vector<long double> BruteForceCounts(const Fragment& f, int max_len) {
  const Regex re(f.Serialize());
  const auto classes = ClassesOf(f);
  std::vector<long double> counts(static_cast<std::size_t>(max_len) + 1, 0);
  std::string prefix;
  auto walk = [&](auto&& self, long double weight) -> void {
    if (f.Matches(prefix)) counts[prefix.size()] += weight;
    if (static_cast<int>(prefix.size()) == max_len) return;
    for (const auto& c : classes) {
      prefix.push_back(c.representative);
      if (re.IsViablePrefix(prefix)) self(self, weight * c.size);
      prefix.pop_back();
    }
  };
  walk(walk, 1);
  return counts;
}

}  // namespace datesynth::testing

#endif  // DATESYNTH_TESTS_LANGUAGE_ORACLE_H_
