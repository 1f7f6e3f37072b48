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

#include "datesynth/preprocess.h"

#include <cctype>

namespace datesynth {

namespace {

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool WordAt(std::string_view text, std::size_t pos, std::string_view word) {
  if (pos + word.size() > text.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != word[i]) {
      return false;
    }
  }
  return true;
}

bool BoundaryBefore(std::string_view text, std::size_t pos) {
  return pos == 0 || !IsWordChar(text[pos - 1]);
}

bool BoundaryAfter(std::string_view text, std::size_t pos) {
  return pos >= text.size() || !IsWordChar(text[pos]);
}

std::string ReplaceToThe(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (BoundaryBefore(text, i) && WordAt(text, i, "to")) {
      std::size_t j = i + 2;
      std::size_t spaces = 0;
      while (j < text.size() && text[j] == ' ') {
        ++j;
        ++spaces;
      }
      if (spaces > 0 && WordAt(text, j, "the") && BoundaryAfter(text, j + 3)) {
        out += '-';
        i = j + 3;
        continue;
      }
    }
    out += text[i++];
  }
  return out;
}

std::string DeleteOf(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (BoundaryBefore(text, i) && WordAt(text, i, "of") &&
        BoundaryAfter(text, i + 2)) {
      i += 2;
      continue;
    }
    out += text[i++];
  }
  return out;
}

std::string CollapseSpaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == ' ' && !out.empty() && out.back() == ' ') continue;
    out += c;
  }
  return out;
}

}  // namespace

std::string preprocess_text(std::string_view text) {
  std::string current(text);
  while (true) {
    std::string next = CollapseSpaces(DeleteOf(ReplaceToThe(current)));
    if (next == current) return next;
    current = std::move(next);
  }
}

}  // namespace datesynth
