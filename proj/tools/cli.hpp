// Copyright 2026 The zkit Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace zkit::cli {

using Json = nlohmann::json;

/// Options shared by every subcommand.
struct RunConfig {
  std::string command;
  int p = 7;
  double tol = 1e-9;
  double membership_tol = 1e-7;
  std::uint64_t seed = 20160901;
  std::filesystem::path out;  // empty: report to stdout only
  std::string format = "json";
  int threads = 0;            // 0: ZKIT_THREADS or hardware concurrency
  bool allow_slow = false;
};

/// Outcome of one command: the report printed on stdout and the exit code
/// (0 when every certificate in the run passed, 1 otherwise).
struct CommandResult {
  int exit_code = 0;
  Json report;
  std::string text;  // non-JSON payload (csv or dot/svg) when requested
};

CommandResult cmd_mub(const RunConfig& cfg, const std::string& family, int x, const std::string& conjugator);
CommandResult cmd_alltop(const RunConfig& cfg);
CommandResult cmd_configurations(const RunConfig& cfg, bool bitmap);
CommandResult cmd_orbits(const RunConfig& cfg);
CommandResult cmd_zauner(const RunConfig& cfg);
CommandResult cmd_reality(const RunConfig& cfg);
CommandResult cmd_mana(const RunConfig& cfg, const std::filesystem::path& state);
CommandResult cmd_maximize_mana(const RunConfig& cfg, int restarts, int iterations);
CommandResult cmd_sic_verify(const RunConfig& cfg, const std::filesystem::path& fiducial);
CommandResult cmd_mobius_plot(const RunConfig& cfg, const std::vector<int>& g);
CommandResult cmd_selftest(const RunConfig& cfg);

/// Graphviz rendering of z -> G z on the projective line, fixed points filled.
std::string mobius_dot(int p, const std::vector<int>& g);
/// Self-contained SVG of the same graph on a circular layout.
std::string mobius_svg(int p, const std::vector<int>& g);

/// Parses argv and dispatches. Library errors print {"error", "message"} on
/// err and return 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zkit::cli
