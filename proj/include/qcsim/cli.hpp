// Copyright 2026 The qcsim Authors
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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcsim {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitValidate = 3,
  kExitRuntime = 4,
  kExitResource = 5,
};

struct RunConfig {
  std::string input;            // circuit file; "-" reads stdin
  std::string engine = "exact";  // exact | encoded | auxvar | dist
  int ranks = 1;                // K_h for the dist engine, a power of two
  std::string slice = "exact";  // dist slice storage: exact | encoded
  int threads = 0;
  std::optional<std::uint64_t> seed;
  std::string format = "table";  // table | json
  std::vector<std::string> query;  // auxvar basis labels
  std::string out;                 // output file instead of stdout
  std::string events_out;          // events file

  bool bench = false;
  int bench_n_min = 16;
  int bench_n_max = 20;
  std::vector<int> bench_ranks{1, 2, 4};
  std::vector<std::string> bench_engines{"exact"};
  std::vector<std::string> bench_circuits{"hadamard", "ghz"};
};

/// Throws ValidationError when the configuration is inconsistent.
void check_config(const RunConfig& config);

/// Runs one configuration and returns the process exit status. Results go to
/// `out` (or config.out), diagnostics and errors to `err`.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qcsim
