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

#include "datesynth/token.h"

namespace datesynth {

namespace {

TokenKind KindOf(char c) {
  if (c >= '0' && c <= '9') return TokenKind::kDigits;
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return TokenKind::kAlpha;
  return TokenKind::kPunct;
}

}  // namespace

const char* ToString(TokenKind kind) {
  switch (kind) {
    case TokenKind::kDigits:
      return "DIGITS";
    case TokenKind::kAlpha:
      return "ALPHA";
    case TokenKind::kPunct:
      return "PUNCT";
  }
  return "PUNCT";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const TokenKind kind = KindOf(text[i]);
    std::size_t j = i + 1;
    if (kind != TokenKind::kPunct) {
      while (j < text.size() && KindOf(text[j]) == kind) ++j;
    }
    tokens.push_back(Token{kind, std::string(text.substr(i, j - i))});
    i = j;
  }
  return tokens;
}

}  // namespace datesynth
