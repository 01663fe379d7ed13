// Copyright 2026 The bisol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BISOL_CLI_COMMANDS_HPP
#define BISOL_CLI_COMMANDS_HPP

#include <string>
#include <vector>

#include "output.hpp"

namespace bisol::cli {

/// Exit codes shared by all commands.
enum Exit : int {
  kOk = 0,
  kSoluble = 0,
  kInsoluble = 1,
  kUndetermined = 2,
  kSingular = 3,
  kUsage = 64,
};

struct FormArgs {
  std::vector<std::string> form;  // nine integers, or empty for batch mode
  std::string input;              // batch file; empty or "-" for stdin
};

int cmd_decide(const RunConfig& cfg, const FormArgs& args);
int cmd_els(const RunConfig& cfg, const FormArgs& args, std::uint64_t random_count, unsigned height);
int cmd_rho(const RunConfig& cfg);
int cmd_table(const RunConfig& cfg);
int cmd_mc(const RunConfig& cfg, const std::string& selector);
int cmd_product(const RunConfig& cfg);
int cmd_real(const RunConfig& cfg);
int cmd_census(const RunConfig& cfg, bool allow_large);
int cmd_scan(const RunConfig& cfg, unsigned k_max, unsigned n_max, unsigned d_max);
int cmd_global(const RunConfig& cfg);

}  // namespace bisol::cli

#endif  // BISOL_CLI_COMMANDS_HPP
