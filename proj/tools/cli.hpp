// Copyright 2026 The nlgames Authors
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


// The nlgames command-line front end. Run() parses arguments and dispatches
// to one Cmd* function per subcommand; those are exposed for tests.

#ifndef NLGAMES_TOOLS_CLI_HPP_
#define NLGAMES_TOOLS_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace nlgames::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,       // bad flags or malformed input files
  kExitValidation = 3,  // input parses but violates a constraint
  kExitRegression = 4,  // a scan or curve contradicts the expected verdict
};

struct RunConfig {
  std::string subcommand;
  bool json = false;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int threads = 0;

  double kappa = 0.5;
  double tau = 1.0;
  std::string game_path;
  std::string box_path;
  std::string strategy_path;
  std::string out_path;

  // quantum
  std::optional<char> best_response;  // 'A' or 'B'
  bool social_optimum = false;
  bool search_povm = false;
  int restarts = 64;
  double equilibrium_tol = 1e-4;

  // scan-povm
  double grid_alpha_step = 1e-3;
  double grid_mu_step = 1e-3;
  double grid_bs_step = 1e-2;
  double grid_alpha_max = 2.0;
  bool grid_no_admissibility = false;
  double grid_mu_max = 1.0;
  std::optional<double> grid_bs;
  std::size_t max_points = 100;

  // gisin-curve
  int grid_points = 999;
  bool csv = false;
};

int CmdGameTable(const RunConfig& cfg, std::ostream& out);
int CmdPayoff(const RunConfig& cfg, std::ostream& out);
int CmdQuantum(const RunConfig& cfg, std::ostream& out);
int CmdScanPovm(const RunConfig& cfg, std::ostream& out);
int CmdGisinCurve(const RunConfig& cfg, std::ostream& out);
int CmdVertices(const RunConfig& cfg, std::ostream& out);
int CmdIsLocal(const RunConfig& cfg, std::ostream& out);

// Parses |argv|, runs the subcommand and maps errors to exit codes. The
// seed falls back to the NLGAMES_SEED environment variable.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nlgames::cli

#endif  // NLGAMES_TOOLS_CLI_HPP_
