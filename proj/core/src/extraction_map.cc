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

#include "datesynth/extraction_map.h"

#include <cctype>
#include <charconv>

namespace datesynth {

namespace {

struct Register {
  bool loaded = false;
  bool absent = false;  // an optional index found nothing
  std::vector<std::string> text;
  std::vector<std::optional<int>> value;
  std::vector<std::optional<std::string>> suffix;

  void Load(std::vector<std::string> pieces) {
    loaded = true;
    absent = false;
    text = std::move(pieces);
    value.assign(text.size(), std::nullopt);
    suffix.assign(text.size(), std::nullopt);
  }
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::optional<int> ParseDigits(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

DecomposeResult Status(DecomposeStatus status, std::string message) {
  DecomposeResult r;
  r.status = status;
  r.message = std::move(message);
  return r;
}

std::optional<std::size_t> Resolve(int index, std::size_t count) {
  const long long i = index < 0 ? static_cast<long long>(count) + index : index;
  if (i < 0 || i >= static_cast<long long>(count)) return std::nullopt;
  return static_cast<std::size_t>(i);
}

}  // namespace

const char* ToString(PartKind part) {
  switch (part) {
    case PartKind::kDay:
      return "day";
    case PartKind::kMonth:
      return "month";
    case PartKind::kYear:
      return "year";
  }
  return "day";
}

std::optional<PartKind> ParsePartKind(std::string_view text) {
  if (text == "day") return PartKind::kDay;
  if (text == "month") return PartKind::kMonth;
  if (text == "year") return PartKind::kYear;
  return std::nullopt;
}

DecomposeOp DecomposeOp::Split(std::string chars) {
  DecomposeOp op;
  op.kind = OpKind::kSplit;
  op.chars = std::move(chars);
  return op;
}

DecomposeOp DecomposeOp::Index(int i, bool optional) {
  DecomposeOp op;
  op.kind = OpKind::kIndex;
  op.index = i;
  op.optional = optional;
  return op;
}

DecomposeOp DecomposeOp::Pair(int i, int j) {
  DecomposeOp op;
  op.kind = OpKind::kPair;
  op.index = i;
  op.index2 = j;
  return op;
}

DecomposeOp DecomposeOp::SplitHyphenRange() {
  DecomposeOp op;
  op.kind = OpKind::kSplitHyphenRange;
  return op;
}

DecomposeOp DecomposeOp::StripOrdinal() {
  DecomposeOp op;
  op.kind = OpKind::kStripOrdinal;
  return op;
}

DecomposeOp DecomposeOp::MonthName() {
  DecomposeOp op;
  op.kind = OpKind::kMonthName;
  return op;
}

DecomposeOp DecomposeOp::PivotYear() {
  DecomposeOp op;
  op.kind = OpKind::kPivotYear;
  return op;
}

DecomposeOp DecomposeOp::Assign(PartKind part) {
  DecomposeOp op;
  op.kind = OpKind::kAssign;
  op.part = part;
  return op;
}

DecomposeResult try_decompose(std::string_view matched_text,
                              const ExtractionMap& map) {
  std::vector<std::string> pieces;
  bool split_done = false;
  Register reg;
  DateParts parts;
  bool have_month = false;
  bool have_year = false;

  for (const DecomposeOp& op : map) {
    switch (op.kind) {
      case OpKind::kSplit: {
        pieces.clear();
        std::string current;
        for (char c : matched_text) {
          if (op.chars.find(c) != std::string::npos) {
            if (!current.empty()) pieces.push_back(std::move(current));
            current.clear();
          } else {
            current += c;
          }
        }
        if (!current.empty()) pieces.push_back(std::move(current));
        split_done = true;
        break;
      }
      case OpKind::kIndex: {
        if (!split_done) pieces = {std::string(matched_text)};
        split_done = true;
        const auto i = Resolve(op.index, pieces.size());
        if (!i) {
          if (op.optional) {
            reg.Load({});
            reg.absent = true;
            break;
          }
          return Status(DecomposeStatus::kDecompositionError,
                        "index " + std::to_string(op.index) +
                            " missing in '" + std::string(matched_text) + "'");
        }
        reg.Load({pieces[*i]});
        break;
      }
      case OpKind::kPair: {
        const auto i = Resolve(op.index, pieces.size());
        const auto j = Resolve(op.index2, pieces.size());
        if (!i || !j) {
          return Status(DecomposeStatus::kDecompositionError,
                        "pair index missing in '" + std::string(matched_text) +
                            "'");
        }
        reg.Load({pieces[*i], pieces[*j]});
        break;
      }
      case OpKind::kSplitHyphenRange: {
        if (!reg.loaded) {
          return Status(DecomposeStatus::kDecompositionError,
                        "split-hyphen-range on an empty register");
        }
        if (reg.absent || reg.text.size() != 1) break;
        const std::string& v = reg.text.front();
        const auto hyphen = v.find('-');
        if (hyphen == std::string::npos) break;
        const std::string a(Trim(std::string_view(v).substr(0, hyphen)));
        const std::string b(Trim(std::string_view(v).substr(hyphen + 1)));
        if (a.empty() || b.empty() || b.find('-') != std::string::npos) {
          return Status(DecomposeStatus::kSemanticInvalid,
                        "malformed range '" + v + "'");
        }
        reg.Load({a, b});
        break;
      }
      case OpKind::kStripOrdinal:
        for (std::size_t k = 0; k < reg.text.size(); ++k) {
          std::string& v = reg.text[k];
          if (v.size() >= 3 && IsAlpha(v[v.size() - 1]) &&
              IsAlpha(v[v.size() - 2])) {
            reg.suffix[k] = v.substr(v.size() - 2);
            for (char& c : *reg.suffix[k]) {
              c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            }
            v.resize(v.size() - 2);
          }
        }
        break;
      case OpKind::kMonthName:
        for (std::size_t k = 0; k < reg.text.size(); ++k) {
          const auto m = try_month_from_name(reg.text[k]);
          if (!m) {
            return Status(DecomposeStatus::kSemanticInvalid,
                          "not a month name: '" + reg.text[k] + "'");
          }
          reg.value[k] = *m;
        }
        break;
      case OpKind::kPivotYear:
        for (std::size_t k = 0; k < reg.text.size(); ++k) {
          const std::string& v = reg.text[k];
          const auto n = ParseDigits(v);
          if (!n || (v.size() != 2 && v.size() != 4)) {
            return Status(DecomposeStatus::kSemanticInvalid,
                          "year must have 2 or 4 digits: '" + v + "'");
          }
          reg.value[k] = v.size() == 2 ? resolve_two_digit_year(*n) : *n;
        }
        break;
      case OpKind::kAssign: {
        if (!reg.loaded) {
          return Status(DecomposeStatus::kDecompositionError,
                        "assign from an empty register");
        }
        if (reg.absent) {
          if (op.part != PartKind::kDay) {
            return Status(DecomposeStatus::kDecompositionError,
                          std::string("required part missing: ") +
                              ToString(op.part));
          }
          reg.loaded = false;
          break;
        }
        std::vector<int> values;
        for (std::size_t k = 0; k < reg.text.size(); ++k) {
          std::optional<int> v = reg.value[k];
          if (!v) v = ParseDigits(reg.text[k]);
          if (!v) {
            return Status(DecomposeStatus::kSemanticInvalid,
                          "not a number: '" + reg.text[k] + "'");
          }
          values.push_back(*v);
        }
        const PartRange range =
            values.size() == 2 ? PartRange(values[0], values[1])
                               : PartRange(values.front());
        switch (op.part) {
          case PartKind::kDay:
            parts.day = range;
            if (reg.suffix.front()) parts.ordinal_suffix = reg.suffix.front();
            if (reg.suffix.size() == 2 && reg.suffix[1]) {
              parts.ordinal_suffix_last = reg.suffix[1];
            }
            break;
          case PartKind::kMonth:
            parts.month = range;
            have_month = true;
            break;
          case PartKind::kYear:
            if (range.is_range()) {
              return Status(DecomposeStatus::kSemanticInvalid,
                            "year ranges are not supported");
            }
            parts.year = range.first;
            have_year = true;
            break;
        }
        reg.loaded = false;
        break;
      }
    }
  }
  if (!have_month || !have_year) {
    return Status(DecomposeStatus::kDecompositionError,
                  "map does not assign both month and year");
  }
  DecomposeResult ok;
  ok.parts = std::move(parts);
  return ok;
}

DateParts decompose(std::string_view matched_text, const ExtractionMap& map) {
  DecomposeResult r = try_decompose(matched_text, map);
  switch (r.status) {
    case DecomposeStatus::kOk:
      return std::move(r.parts);
    case DecomposeStatus::kDecompositionError:
      throw DecompositionError(r.message);
    case DecomposeStatus::kSemanticInvalid:
      throw DateError(DateErrorCode::kSemanticInvalid, r.message);
  }
  throw DecompositionError("unreachable");
}

std::vector<std::string> SerializeMap(const ExtractionMap& map) {
  std::vector<std::string> out;
  for (const auto& op : map) {
    switch (op.kind) {
      case OpKind::kSplit:
        out.push_back("split:" + op.chars);
        break;
      case OpKind::kIndex:
        out.push_back("index:" + std::to_string(op.index) +
                      (op.optional ? "?" : ""));
        break;
      case OpKind::kPair:
        out.push_back("pair:" + std::to_string(op.index) + "," +
                      std::to_string(op.index2));
        break;
      case OpKind::kSplitHyphenRange:
        out.push_back("split-hyphen-range");
        break;
      case OpKind::kStripOrdinal:
        out.push_back("strip-ordinal");
        break;
      case OpKind::kMonthName:
        out.push_back("month-name-lookup");
        break;
      case OpKind::kPivotYear:
        out.push_back("pivot-2-digit-year");
        break;
      case OpKind::kAssign:
        out.push_back(std::string("assign:") + ToString(op.part));
        break;
    }
  }
  return out;
}

ExtractionMap ParseMap(const std::vector<std::string>& ops) {
  ExtractionMap map;
  auto bad = [](const std::string& s) {
    return std::invalid_argument("malformed extraction op: '" + s + "'");
  };
  auto parse_int = [&](std::string_view s, const std::string& whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw bad(whole);
    return v;
  };
  for (const std::string& s : ops) {
    const auto colon = s.find(':');
    const std::string name = s.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (name == "split") {
      if (arg.empty()) throw bad(s);
      map.push_back(DecomposeOp::Split(arg));
    } else if (name == "index") {
      std::string_view a = arg;
      const bool optional = !a.empty() && a.back() == '?';
      if (optional) a.remove_suffix(1);
      map.push_back(DecomposeOp::Index(parse_int(a, s), optional));
    } else if (name == "pair") {
      const auto comma = arg.find(',');
      if (comma == std::string::npos) throw bad(s);
      map.push_back(DecomposeOp::Pair(
          parse_int(std::string_view(arg).substr(0, comma), s),
          parse_int(std::string_view(arg).substr(comma + 1), s)));
    } else if (name == "split-hyphen-range") {
      map.push_back(DecomposeOp::SplitHyphenRange());
    } else if (name == "strip-ordinal") {
      map.push_back(DecomposeOp::StripOrdinal());
    } else if (name == "month-name-lookup") {
      map.push_back(DecomposeOp::MonthName());
    } else if (name == "pivot-2-digit-year") {
      map.push_back(DecomposeOp::PivotYear());
    } else if (name == "assign") {
      const auto part = ParsePartKind(arg);
      if (!part) throw bad(s);
      map.push_back(DecomposeOp::Assign(*part));
    } else {
      throw bad(s);
    }
  }
  return map;
}

}  // namespace datesynth
