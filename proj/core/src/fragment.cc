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

#include "datesynth/fragment.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace datesynth {

namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

int DigitCount(std::int64_t v) {
  int n = 1;
  while (v >= 10) {
    v /= 10;
    ++n;
  }
  return n;
}

std::int64_t Pow10(int n) {
  std::int64_t p = 1;
  while (n-- > 0) p *= 10;
  return p;
}

// Alternatives covering [lo, hi] where both have the same number of digits.
void SameWidthRange(const std::string& lo, const std::string& hi,
                    std::vector<std::string>& out) {
  if (lo == hi) {
    out.push_back(lo);
    return;
  }
  auto klass = [](char a, char b) {
    if (a == b) return std::string(1, a);
    if (a == '0' && b == '9') return std::string("[0-9]");
    return std::string("[") + a + "-" + b + "]";
  };
  if (lo.size() == 1) {
    out.push_back(klass(lo[0], hi[0]));
    return;
  }
  const std::string lo_rest = lo.substr(1);
  const std::string hi_rest = hi.substr(1);
  if (lo[0] == hi[0]) {
    std::vector<std::string> inner;
    SameWidthRange(lo_rest, hi_rest, inner);
    for (const auto& s : inner) out.push_back(lo[0] + s);
    return;
  }
  const std::size_t rest = lo_rest.size();
  const bool lo_zero = lo_rest == std::string(rest, '0');
  const bool hi_nine = hi_rest == std::string(rest, '9');
  auto tail = [&](std::size_t n) {
    return n == 1 ? std::string("[0-9]")
                  : "[0-9]{" + std::to_string(n) + "}";
  };
  char mid_lo = static_cast<char>(lo[0] + 1);
  char mid_hi = static_cast<char>(hi[0] - 1);
  if (lo_zero) {
    mid_lo = lo[0];
  } else {
    std::vector<std::string> inner;
    SameWidthRange(lo_rest, std::string(rest, '9'), inner);
    for (const auto& s : inner) out.push_back(lo[0] + s);
  }
  if (hi_nine) mid_hi = hi[0];
  if (mid_lo <= mid_hi) out.push_back(klass(mid_lo, mid_hi) + tail(rest));
  if (!hi_nine) {
    std::vector<std::string> inner;
    SameWidthRange(std::string(rest, '0'), hi_rest, inner);
    for (const auto& s : inner) out.push_back(hi[0] + s);
  }
}

std::string JoinAlternatives(const std::vector<std::string>& alts) {
  if (alts.size() == 1) return alts.front();
  std::string out = "(";
  for (std::size_t i = 0; i < alts.size(); ++i) {
    if (i > 0) out += '|';
    out += alts[i];
  }
  out += ')';
  return out;
}

std::string CharSetSource(const std::string& chars) {
  std::string out = "[";
  if (chars.find('-') != std::string::npos) out += '-';
  for (char c : chars) {
    if (c == '-') continue;
    if (c == '\\' || c == ']' || c == '^' || c == '[') out += '\\';
    out += c;
  }
  out += ']';
  return out;
}

std::string RepeatSuffix(int min, int max) {
  if (min == 1 && max == 1) return "";
  if (min == max) return "{" + std::to_string(min) + "}";
  return "{" + std::to_string(min) + "," + std::to_string(max) + "}";
}

}  // namespace

std::string EscapeLiteral(std::string_view text) {
  static constexpr std::string_view kMeta = "\\^$.|?*+()[]{}";
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (kMeta.find(c) != std::string_view::npos) out += '\\';
    out += c;
  }
  return out;
}

std::string NumericRangeRegex(std::int64_t lo, std::int64_t hi, bool padded) {
  if (lo < 0 || lo > hi) {
    throw std::invalid_argument("NumericRange requires 0 <= lo <= hi");
  }
  std::vector<std::string> alts;
  for (int width = DigitCount(lo); width <= DigitCount(hi); ++width) {
    const std::int64_t band_lo = std::max(lo, width == 1 ? 0 : Pow10(width - 1));
    const std::int64_t band_hi = std::min(hi, Pow10(width) - 1);
    if (band_lo > band_hi) continue;
    std::vector<std::string> band;
    SameWidthRange(std::to_string(band_lo), std::to_string(band_hi), band);
    for (auto& s : band) {
      alts.push_back(width == 1 && padded ? "0?" + s : s);
    }
  }
  return JoinAlternatives(alts);
}

Fragment Fragment::Literal(std::string text) {
  if (text.empty()) throw std::invalid_argument("empty literal");
  Fragment f;
  f.kind_ = FragmentKind::kLiteral;
  f.text_ = std::move(text);
  return f;
}

Fragment Fragment::CharSet(std::string chars) {
  std::sort(chars.begin(), chars.end());
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  if (chars.empty()) throw std::invalid_argument("empty character set");
  Fragment f;
  f.kind_ = FragmentKind::kCharSet;
  f.text_ = std::move(chars);
  return f;
}

Fragment Fragment::AnyDigit(int min, int max) {
  if (min < 1 || min > max) throw std::invalid_argument("AnyDigit bounds");
  Fragment f;
  f.kind_ = FragmentKind::kAnyDigit;
  f.lo_ = min;
  f.hi_ = max;
  return f;
}

Fragment Fragment::AnyAlpha(int min, int max) {
  if (min < 1 || min > max) throw std::invalid_argument("AnyAlpha bounds");
  Fragment f;
  f.kind_ = FragmentKind::kAnyAlpha;
  f.lo_ = min;
  f.hi_ = max;
  return f;
}

Fragment Fragment::NumericRange(std::int64_t lo, std::int64_t hi, bool padded) {
  if (lo < 0 || lo > hi) {
    throw std::invalid_argument("NumericRange requires 0 <= lo <= hi");
  }
  Fragment f;
  f.kind_ = FragmentKind::kNumericRange;
  f.lo_ = lo;
  f.hi_ = hi;
  f.padded_ = padded;
  return f;
}

Fragment Fragment::Alternation(std::vector<Fragment> branches) {
  if (branches.empty()) throw std::invalid_argument("empty alternation");
  std::set<std::string> seen;
  for (const auto& b : branches) {
    if (!seen.insert(b.Serialize()).second) {
      throw std::invalid_argument("alternation branches must be distinct");
    }
  }
  Fragment f;
  f.kind_ = FragmentKind::kAlternation;
  f.children_ = std::move(branches);
  return f;
}

Fragment Fragment::Optional(Fragment child) {
  Fragment f;
  f.kind_ = FragmentKind::kOptional;
  f.children_.push_back(std::move(child));
  return f;
}

Fragment Fragment::Concat(std::vector<Fragment> parts) {
  if (parts.empty()) throw std::invalid_argument("empty concatenation");
  Fragment f;
  f.kind_ = FragmentKind::kConcat;
  f.children_ = std::move(parts);
  return f;
}

int Fragment::size() const {
  int n = 1;
  for (const auto& c : children_) n += c.size();
  return n;
}

std::string Fragment::Serialize() const {
  switch (kind_) {
    case FragmentKind::kLiteral:
      return EscapeLiteral(text_);
    case FragmentKind::kCharSet:
      return CharSetSource(text_);
    case FragmentKind::kAnyDigit:
      return "[0-9]" + RepeatSuffix(static_cast<int>(lo_), static_cast<int>(hi_));
    case FragmentKind::kAnyAlpha:
      return "[A-Za-z]" +
             RepeatSuffix(static_cast<int>(lo_), static_cast<int>(hi_));
    case FragmentKind::kNumericRange:
      return NumericRangeRegex(lo_, hi_, padded_);
    case FragmentKind::kAlternation: {
      if (children_.size() == 1) return children_.front().Serialize();
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) out += '|';
        out += children_[i].Serialize();
      }
      return out + ")";
    }
    case FragmentKind::kOptional: {
      const Fragment& child = children_.front();
      if (child.kind_ == FragmentKind::kAlternation &&
          child.children_.size() > 1) {
        return child.Serialize() + "?";
      }
      return "(" + child.Serialize() + ")?";
    }
    case FragmentKind::kConcat: {
      std::string out;
      for (const auto& c : children_) out += c.Serialize();
      return out;
    }
  }
  return {};
}

void Fragment::Ends(std::string_view text, std::size_t pos,
                    std::vector<std::size_t>& out) const {
  switch (kind_) {
    case FragmentKind::kLiteral:
      if (text.substr(pos, text_.size()) == text_) out.push_back(pos + text_.size());
      return;
    case FragmentKind::kCharSet:
      if (pos < text.size() && text_.find(text[pos]) != std::string::npos) {
        out.push_back(pos + 1);
      }
      return;
    case FragmentKind::kAnyDigit:
    case FragmentKind::kAnyAlpha: {
      const bool digits = kind_ == FragmentKind::kAnyDigit;
      std::size_t n = 0;
      while (pos + n < text.size() && n < static_cast<std::size_t>(hi_) &&
             (digits ? IsDigit(text[pos + n]) : IsAlpha(text[pos + n]))) {
        ++n;
        if (n >= static_cast<std::size_t>(lo_)) out.push_back(pos + n);
      }
      return;
    }
    case FragmentKind::kNumericRange: {
      std::int64_t value = 0;
      const int width = std::max(DigitCount(hi_), padded_ ? 2 : 1);
      for (int n = 1; n <= width && pos + n <= text.size(); ++n) {
        const char c = text[pos + n - 1];
        if (!IsDigit(c)) break;
        value = value * 10 + (c - '0');
        const bool canonical = n == 1 || text[pos] != '0';
        const bool pad_form = padded_ && n == 2 && text[pos] == '0';
        if ((canonical || pad_form) && value >= lo_ && value <= hi_) {
          out.push_back(pos + n);
        }
      }
      return;
    }
    case FragmentKind::kAlternation:
      for (const auto& c : children_) c.Ends(text, pos, out);
      return;
    case FragmentKind::kOptional:
      out.push_back(pos);
      children_.front().Ends(text, pos, out);
      return;
    case FragmentKind::kConcat: {
      std::vector<std::size_t> frontier{pos};
      std::vector<std::size_t> next;
      for (const auto& c : children_) {
        next.clear();
        for (std::size_t p : frontier) c.Ends(text, p, next);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier.swap(next);
        if (frontier.empty()) return;
      }
      out.insert(out.end(), frontier.begin(), frontier.end());
      return;
    }
  }
}

bool Fragment::Matches(std::string_view text) const {
  std::vector<std::size_t> ends;
  Ends(text, 0, ends);
  return std::find(ends.begin(), ends.end(), text.size()) != ends.end();
}

std::vector<long double> Fragment::CountByLength(int max_len) const {
  std::vector<long double> counts(static_cast<std::size_t>(max_len) + 1, 0.0L);
  switch (kind_) {
    case FragmentKind::kLiteral:
      if (static_cast<int>(text_.size()) <= max_len) counts[text_.size()] = 1;
      break;
    case FragmentKind::kCharSet:
      if (max_len >= 1) counts[1] = static_cast<long double>(text_.size());
      break;
    case FragmentKind::kAnyDigit:
    case FragmentKind::kAnyAlpha: {
      const long double base = kind_ == FragmentKind::kAnyDigit ? 10 : 52;
      for (std::int64_t n = lo_; n <= hi_ && n <= max_len; ++n) {
        counts[n] = std::pow(base, static_cast<long double>(n));
      }
      break;
    }
    case FragmentKind::kNumericRange: {
      for (int width = 1; width <= max_len && width <= 19; ++width) {
        const std::int64_t band_lo = width == 1 ? 0 : Pow10(width - 1);
        const std::int64_t band_hi = Pow10(width) - 1;
        const std::int64_t a = std::max(lo_, band_lo);
        const std::int64_t b = std::min(hi_, band_hi);
        if (a <= b) counts[width] += static_cast<long double>(b - a + 1);
      }
      if (padded_ && max_len >= 2 && lo_ <= 9) {
        counts[2] += static_cast<long double>(std::min<std::int64_t>(hi_, 9) - lo_ + 1);
      }
      break;
    }
    case FragmentKind::kAlternation:
      for (const auto& c : children_) {
        const auto sub = c.CountByLength(max_len);
        for (int n = 0; n <= max_len; ++n) counts[n] += sub[n];
      }
      if (counts[0] > 1) counts[0] = 1;
      break;
    case FragmentKind::kOptional:
      counts = children_.front().CountByLength(max_len);
      counts[0] = 1;
      break;
    case FragmentKind::kConcat: {
      counts[0] = 1;
      for (const auto& c : children_) {
        const auto sub = c.CountByLength(max_len);
        std::vector<long double> next(counts.size(), 0.0L);
        for (int i = 0; i <= max_len; ++i) {
          if (counts[i] == 0) continue;
          for (int j = 0; i + j <= max_len; ++j) {
            if (sub[j] != 0) next[i + j] += counts[i] * sub[j];
          }
        }
        counts.swap(next);
      }
      break;
    }
  }
  return counts;
}

long double Fragment::LanguageSize(int max_len) const {
  long double total = 0;
  for (long double c : CountByLength(max_len)) total += c;
  return total;
}

bool Fragment::operator==(const Fragment& other) const {
  return kind_ == other.kind_ && text_ == other.text_ && lo_ == other.lo_ &&
         hi_ == other.hi_ && padded_ == other.padded_ &&
         children_ == other.children_;
}

}  // namespace datesynth
