// Copyright 2026 The cohread Authors
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

#ifndef COHREAD_CLI_H_
#define COHREAD_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cohread/linalg.h"

namespace cohread {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainFailure = 1,
  kExitUsage = 2,
};

/// Runs the command line front end. JSON results go to `out` (or the --out
/// file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Multinomial draw of `shots` outcomes from `probabilities`, one inverse-CDF
/// lookup per shot. Deterministic in `seed`. Negative entries down to
/// -1e-10 are treated as zero; anything more negative throws
/// std::domain_error.
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities,
                                         std::uint64_t shots, std::uint64_t seed);

}  // namespace cohread

#endif  // COHREAD_CLI_H_
