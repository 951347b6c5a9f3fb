// Copyright 2026 The mubkit Authors
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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mubkit {

/// Process exit codes of the mubkit command line.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitBadInput = 2,
  kExitConstructionFailed = 3,
};

/// Runs `mubkit <subcommand> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One-line summary printed by `mubkit info --dim D`.
std::string dimension_info(std::uint64_t dim);

}  // namespace mubkit
