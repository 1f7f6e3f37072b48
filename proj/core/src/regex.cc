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

#include "datesynth/regex.h"

#include <utility>

namespace datesynth {

namespace {

constexpr int kUnbounded = -1;
constexpr int kMaxRepeat = 1000;

struct Node {
  enum Type { kChars, kEmpty, kConcat, kAlternation, kRepeat };
  Type type = kEmpty;
  CharClass chars;
  std::vector<Node> children;
  int min = 0;
  int max = 0;
};

CharClass Range(unsigned char lo, unsigned char hi) {
  CharClass set;
  for (unsigned c = lo; c <= hi; ++c) set.set(c);
  return set;
}

CharClass Single(unsigned char c) {
  CharClass set;
  set.set(c);
  return set;
}

CharClass Digits() { return Range('0', '9'); }

CharClass Word() {
  CharClass set = Range('a', 'z') | Range('A', 'Z') | Digits();
  set.set('_');
  return set;
}

CharClass Space() {
  CharClass set;
  for (char c : std::string_view(" \t\n\r\f\v")) {
    set.set(static_cast<unsigned char>(c));
  }
  return set;
}

class Parser {
 public:
  explicit Parser(std::string_view pattern) : pattern_(pattern) {}

  Node Parse() {
    Node node = ParseAlternation();
    if (pos_ != pattern_.size()) Error("unbalanced ')'");
    return node;
  }

 private:
  [[noreturn]] void Error(const std::string& what) const {
    throw RegexSyntaxError("regex syntax error at offset " +
                               std::to_string(pos_) + ": " + what,
                           pos_);
  }

  bool AtEnd() const { return pos_ >= pattern_.size(); }
  char Peek() const { return pattern_[pos_]; }

  Node ParseAlternation() {
    Node first = ParseConcat();
    if (AtEnd() || Peek() != '|') return first;
    Node alt;
    alt.type = Node::kAlternation;
    alt.children.push_back(std::move(first));
    while (!AtEnd() && Peek() == '|') {
      ++pos_;
      alt.children.push_back(ParseConcat());
    }
    return alt;
  }

  Node ParseConcat() {
    Node concat;
    concat.type = Node::kConcat;
    while (!AtEnd() && Peek() != '|' && Peek() != ')') {
      concat.children.push_back(ParseRepeat());
    }
    if (concat.children.empty()) return Node{};
    if (concat.children.size() == 1) return std::move(concat.children[0]);
    return concat;
  }

  int ParseNumber() {
    if (AtEnd() || Peek() < '0' || Peek() > '9') Error("expected a number");
    int value = 0;
    while (!AtEnd() && Peek() >= '0' && Peek() <= '9') {
      value = value * 10 + (Peek() - '0');
      if (value > kMaxRepeat) Error("repetition bound too large");
      ++pos_;
    }
    return value;
  }

  Node ParseRepeat() {
    Node atom = ParseAtom();
    while (!AtEnd()) {
      int min = 0;
      int max = 0;
      const char c = Peek();
      if (c == '?') {
        min = 0;
        max = 1;
        ++pos_;
      } else if (c == '*') {
        min = 0;
        max = kUnbounded;
        ++pos_;
      } else if (c == '+') {
        min = 1;
        max = kUnbounded;
        ++pos_;
      } else if (c == '{') {
        ++pos_;
        min = ParseNumber();
        max = min;
        if (!AtEnd() && Peek() == ',') {
          ++pos_;
          max = (!AtEnd() && Peek() == '}') ? kUnbounded : ParseNumber();
        }
        if (AtEnd() || Peek() != '}') Error("unterminated repetition");
        ++pos_;
        if (max != kUnbounded && max < min) Error("repetition max < min");
      } else {
        break;
      }
      Node repeat;
      repeat.type = Node::kRepeat;
      repeat.min = min;
      repeat.max = max;
      repeat.children.push_back(std::move(atom));
      atom = std::move(repeat);
    }
    return atom;
  }

  CharClass ParseEscape() {
    ++pos_;  // backslash
    if (AtEnd()) Error("trailing backslash");
    const char c = pattern_[pos_++];
    switch (c) {
      case 'd':
        return Digits();
      case 'D':
        return ~Digits();
      case 'w':
        return Word();
      case 'W':
        return ~Word();
      case 's':
        return Space();
      case 'S':
        return ~Space();
      case 't':
        return Single('\t');
      case 'n':
        return Single('\n');
      case 'r':
        return Single('\r');
      default:
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
            (c >= '0' && c <= '9')) {
          --pos_;
          Error(std::string("unsupported escape \\") + c);
        }
        return Single(static_cast<unsigned char>(c));
    }
  }

  CharClass ParseClass() {
    ++pos_;  // '['
    bool negate = false;
    if (!AtEnd() && Peek() == '^') {
      negate = true;
      ++pos_;
    }
    CharClass set;
    bool any = false;
    while (true) {
      if (AtEnd()) Error("unterminated character set");
      if (Peek() == ']' && any) {
        ++pos_;
        break;
      }
      if (Peek() == ']') Error("empty character set");
      CharClass item;
      int lo = -1;
      if (Peek() == '\\') {
        item = ParseEscape();
        if (item.count() == 1) {
          for (int c = 0; c < 256; ++c) {
            if (item.test(static_cast<std::size_t>(c))) lo = c;
          }
        }
      } else {
        lo = static_cast<unsigned char>(pattern_[pos_++]);
        item = Single(static_cast<unsigned char>(lo));
      }
      if (lo >= 0 && pos_ + 1 < pattern_.size() && Peek() == '-' &&
          pattern_[pos_ + 1] != ']') {
        ++pos_;  // '-'
        int hi = -1;
        if (Peek() == '\\') {
          const CharClass esc = ParseEscape();
          if (esc.count() != 1) Error("class shorthand as range bound");
          for (int c = 0; c < 256; ++c) {
            if (esc.test(static_cast<std::size_t>(c))) hi = c;
          }
        } else {
          hi = static_cast<unsigned char>(pattern_[pos_++]);
        }
        if (hi < lo) Error("inverted character range");
        item = Range(static_cast<unsigned char>(lo),
                     static_cast<unsigned char>(hi));
      }
      set |= item;
      any = true;
    }
    return negate ? ~set : set;
  }

  Node ParseAtom() {
    if (AtEnd()) Error("expected an atom");
    Node node;
    const char c = Peek();
    switch (c) {
      case '(': {
        ++pos_;
        if (pattern_.substr(pos_, 2) == "?:") pos_ += 2;
        node = ParseAlternation();
        if (AtEnd() || Peek() != ')') Error("missing ')'");
        ++pos_;
        return node;
      }
      case '[':
        node.type = Node::kChars;
        node.chars = ParseClass();
        return node;
      case '\\':
        node.type = Node::kChars;
        node.chars = ParseEscape();
        return node;
      case '.':
        ++pos_;
        node.type = Node::kChars;
        node.chars = ~Single('\n');
        return node;
      case '*':
      case '+':
      case '?':
      case '{':
        Error(std::string("quantifier '") + c + "' without an atom");
      case '^':
      case '$':
        Error("anchors are not part of the dialect");
      default:
        ++pos_;
        node.type = Node::kChars;
        node.chars = Single(static_cast<unsigned char>(c));
        return node;
    }
  }

  std::string_view pattern_;
  std::size_t pos_ = 0;
};

}  // namespace

// Thompson construction over the parsed tree. Dangling exits are recorded
// as (state, second-branch) pairs and patched once the successor exists.
class RegexCompiler {
 public:
  explicit RegexCompiler(Regex& regex) : regex_(regex) {}

  struct Frag {
    int start = -1;
    std::vector<std::pair<int, bool>> outs;
  };

  int NewState(Regex::State::Type type) {
    Regex::State state;
    state.type = type;
    regex_.states_.push_back(state);
    return static_cast<int>(regex_.states_.size()) - 1;
  }

  void Patch(const std::vector<std::pair<int, bool>>& outs, int target) {
    for (const auto& [state, second] : outs) {
      if (second) {
        regex_.states_[state].out1 = target;
      } else {
        regex_.states_[state].out = target;
      }
    }
  }

  Frag Epsilon() {
    const int s = NewState(Regex::State::kSplit);
    return Frag{s, {{s, false}}};
  }

  Frag Optional(const Node& child) {
    Frag inner = Compile(child);
    const int split = NewState(Regex::State::kSplit);
    regex_.states_[split].out = inner.start;
    Frag frag{split, std::move(inner.outs)};
    frag.outs.emplace_back(split, true);
    return frag;
  }

  Frag Star(const Node& child) {
    Frag inner = Compile(child);
    const int split = NewState(Regex::State::kSplit);
    regex_.states_[split].out = inner.start;
    Patch(inner.outs, split);
    return Frag{split, {{split, true}}};
  }

  Frag Sequence(std::vector<Frag> parts) {
    if (parts.empty()) return Epsilon();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      Patch(parts[i].outs, parts[i + 1].start);
    }
    return Frag{parts.front().start, std::move(parts.back().outs)};
  }

  Frag Compile(const Node& node) {
    switch (node.type) {
      case Node::kEmpty:
        return Epsilon();
      case Node::kChars: {
        const int s = NewState(Regex::State::kChar);
        regex_.states_[s].chars = node.chars;
        return Frag{s, {{s, false}}};
      }
      case Node::kConcat: {
        std::vector<Frag> parts;
        parts.reserve(node.children.size());
        for (const Node& child : node.children) parts.push_back(Compile(child));
        return Sequence(std::move(parts));
      }
      case Node::kAlternation: {
        Frag acc = Compile(node.children.back());
        for (std::size_t i = node.children.size() - 1; i-- > 0;) {
          Frag branch = Compile(node.children[i]);
          const int split = NewState(Regex::State::kSplit);
          regex_.states_[split].out = branch.start;
          regex_.states_[split].out1 = acc.start;
          Frag merged{split, std::move(branch.outs)};
          merged.outs.insert(merged.outs.end(), acc.outs.begin(),
                             acc.outs.end());
          acc = std::move(merged);
        }
        return acc;
      }
      case Node::kRepeat: {
        const Node& child = node.children.front();
        std::vector<Frag> parts;
        for (int i = 0; i < node.min; ++i) parts.push_back(Compile(child));
        if (node.max == kUnbounded) {
          parts.push_back(Star(child));
        } else {
          for (int i = node.min; i < node.max; ++i) {
            parts.push_back(Optional(child));
          }
        }
        return Sequence(std::move(parts));
      }
    }
    return Epsilon();
  }

 private:
  Regex& regex_;
};

Regex::Regex(std::string_view pattern) : pattern_(pattern) {
  const Node root = Parser(pattern).Parse();
  RegexCompiler compiler(*this);
  RegexCompiler::Frag frag = compiler.Compile(root);
  const int match = compiler.NewState(State::kMatch);
  compiler.Patch(frag.outs, match);
  start_ = frag.start;

  Scratch scratch;
  scratch.mark_.assign(states_.size(), 0);
  std::vector<int> list;
  AddState(start_, 1, scratch, list);
  for (int s : list) {
    if (states_[s].type == State::kChar) first_ |= states_[s].chars;
  }
}

void Regex::AddState(int state, std::uint32_t generation, Scratch& scratch,
                     std::vector<int>& list) const {
  auto& stack = scratch.stack_;
  stack.clear();
  stack.push_back(state);
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    if (s < 0 || scratch.mark_[s] == generation) continue;
    scratch.mark_[s] = generation;
    const State& st = states_[s];
    if (st.type == State::kSplit) {
      stack.push_back(st.out1);
      stack.push_back(st.out);
    } else {
      list.push_back(s);
    }
  }
}

void Regex::MatchEnds(std::string_view text, std::size_t start,
                      Scratch& scratch,
                      std::vector<std::size_t>& ends) const {
  ends.clear();
  if (start >= text.size()) return;
  if (!first_.test(static_cast<unsigned char>(text[start]))) return;
  if (scratch.mark_.size() != states_.size() ||
      scratch.generation_ > 0xFFFFFF00u) {
    scratch.mark_.assign(states_.size(), 0);
    scratch.generation_ = 0;
  }
  auto& current = scratch.current_;
  auto& next = scratch.next_;
  current.clear();
  AddState(start_, ++scratch.generation_, scratch, current);
  for (std::size_t pos = start; pos < text.size() && !current.empty(); ++pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    next.clear();
    const std::uint32_t generation = ++scratch.generation_;
    for (int s : current) {
      const State& st = states_[s];
      if (st.type == State::kChar && st.chars.test(c)) {
        AddState(st.out, generation, scratch, next);
      }
    }
    current.swap(next);
    for (int s : current) {
      if (states_[s].type == State::kMatch) {
        ends.push_back(pos + 1);
        break;
      }
    }
  }
}

bool Regex::IsViablePrefix(std::string_view prefix) const {
  Scratch scratch;
  scratch.mark_.assign(states_.size(), 0);
  std::vector<int> current;
  std::vector<int> next;
  AddState(start_, ++scratch.generation_, scratch, current);
  for (char ch : prefix) {
    const auto c = static_cast<unsigned char>(ch);
    next.clear();
    const std::uint32_t generation = ++scratch.generation_;
    for (int s : current) {
      const State& st = states_[s];
      if (st.type == State::kChar && st.chars.test(c)) {
        AddState(st.out, generation, scratch, next);
      }
    }
    current.swap(next);
    if (current.empty()) return false;
  }
  // Every state of the construction reaches kMatch.
  return !current.empty();
}

bool Regex::FullMatch(std::string_view text) const {
  if (text.empty()) {
    Scratch scratch;
    scratch.mark_.assign(states_.size(), 0);
    std::vector<int> list;
    AddState(start_, 1, scratch, list);
    for (int s : list) {
      if (states_[s].type == State::kMatch) return true;
    }
    return false;
  }
  Scratch scratch;
  std::vector<std::size_t> ends;
  MatchEnds(text, 0, scratch, ends);
  return !ends.empty() && ends.back() == text.size();
}

}  // namespace datesynth
