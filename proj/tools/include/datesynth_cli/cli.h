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

#ifndef DATESYNTH_CLI_CLI_H_
#define DATESYNTH_CLI_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "datesynth/calendar.h"

namespace datesynth::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitValidation = 4,
};

inline constexpr const char* kEndpointEnv = "DATESYNTH_TRANSCRIPTION_ENDPOINT";

// Runs one subcommand with argv[0] as the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct BenchConfig {
  CivilDate from{1970, 1, 1};
  CivilDate to{1970, 12, 31};
  std::uint64_t seed = 20240501;
  double lambda = 1.0;
  std::string out_dir;
};

// gen-corpus, noise injection, synth, extract with every bank and eval, all
// written under cfg.out_dir. Returns the plain-text report.
std::string RunBench(const BenchConfig& cfg);

}  // namespace datesynth::cli

#endif  // DATESYNTH_CLI_CLI_H_
