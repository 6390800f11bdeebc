// Copyright 2026 The ctsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Subcommands: synth, su2, bench, verify, enumerate.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ctsynth::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSynthesisFailed = 2,
  kVerificationFailed = 3,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ctsynth::cli
