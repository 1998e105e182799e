// Copyright 2026 The robsel Authors
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

#ifndef ROBSEL_CLI_HPP
#define ROBSEL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace robsel {

/// Parsed command-line configuration. Results go to stdout as JSON lines,
/// diagnostics to stderr. Exit codes: 0 success, 1 invalid input, 2
/// algorithm/problem mismatch.
struct RunConfig {
  std::string command;            // solve | gen | export | verify
  std::string problem;            // irec | i2st | arec | a2st | rrec | r2st
  std::string algorithm = "auto"; // auto | intervals | levels | lp | enum | approx | oracle
  std::string instance_path;
  std::string output_path;
  std::uint64_t seed = 0;

  // generator parameters
  int n = 8;
  std::optional<int> p;
  std::optional<int> k;
  std::optional<std::string> gamma;
  std::string budget_model = "continuous";
  long first_stage_max = 10;
  long nominal_max = 10;
  long deviation_max = 10;

  int count = 100;  // verify batch size
};

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full argument parsing plus dispatch; used by the robsel binary.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace robsel

#endif  // ROBSEL_CLI_HPP
