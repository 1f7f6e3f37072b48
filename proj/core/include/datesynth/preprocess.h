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

#ifndef DATESYNTH_PREPROCESS_H_
#define DATESYNTH_PREPROCESS_H_

#include <string>
#include <string_view>

namespace datesynth {

// Rewrites word-bounded "to the" (any case, any run of spaces between) to
// "-", deletes word-bounded "of", and collapses runs of spaces. Repeats
// until nothing changes, so the result is a fixed point. Newlines are kept.
std::string preprocess_text(std::string_view text);

}  // namespace datesynth

#endif  // DATESYNTH_PREPROCESS_H_
