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

#ifndef DATESYNTH_TOKEN_H_
#define DATESYNTH_TOKEN_H_

#include <string>
#include <string_view>
#include <vector>

namespace datesynth {

enum class TokenKind { kDigits, kAlpha, kPunct };

const char* ToString(TokenKind kind);

// Maximal runs of ASCII digits or ASCII letters; every other byte is a
// single PUNCT token.
struct Token {
  TokenKind kind = TokenKind::kPunct;
  std::string text;

  std::size_t length() const { return text.size(); }
  bool operator==(const Token&) const = default;
};

std::vector<Token> tokenize(std::string_view text);

}  // namespace datesynth

#endif  // DATESYNTH_TOKEN_H_
