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

#include "datesynth/bank.h"

#include <set>
#include <stdexcept>

#include "datesynth/regex.h"

namespace datesynth {

std::string_view ToString(Provenance provenance) {
  switch (provenance) {
    case Provenance::kCommunity:
      return "community";
    case Provenance::kBespoke:
      return "bespoke";
    case Provenance::kSynthesized:
      return "synthesized";
  }
  return "unknown";
}

std::optional<Provenance> ParseProvenance(std::string_view text) {
  for (Provenance p :
       {Provenance::kCommunity, Provenance::kBespoke, Provenance::kSynthesized}) {
    if (text == ToString(p)) return p;
  }
  return std::nullopt;
}

void RegexBank::Validate() const {
  std::set<int> seen;
  for (const auto& e : entries) {
    if (!seen.insert(e.priority).second) {
      throw std::invalid_argument("duplicate bank priority " +
                                  std::to_string(e.priority));
    }
    try {
      Regex compiled(e.pattern);
    } catch (const RegexSyntaxError& err) {
      throw std::invalid_argument("bank entry " + std::to_string(e.priority) +
                                  ": " + err.what());
    }
  }
}

}  // namespace datesynth
