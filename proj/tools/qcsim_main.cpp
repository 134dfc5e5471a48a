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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcsim/cli.hpp"

int main(int argc, char** argv) {
  qcsim::RunConfig config;
  CLI::App app{"State-vector quantum circuit simulator"};
  app.add_option("-i,--input", config.input, "Circuit file ('-' for stdin)");
  app.add_option("-e,--engine", config.engine, "exact | encoded | auxvar | dist");
  app.add_option("-r,--ranks", config.ranks, "Ranks for the dist engine (power of two)");
  app.add_option("--slice", config.slice, "Slice storage of the dist engine: exact | encoded");
  app.add_option("-t,--threads", config.threads, "Worker threads (0: OpenMP default)");
  app.add_option("-s,--seed", config.seed, "Seed for measurements and seedless event/noise draws");
  app.add_option("-f,--format", config.format, "table | json");
  app.add_option("-q,--query", config.query, "Basis states for the auxvar engine (bits or 0x hex)")
      ->delimiter(',');
  app.add_option("-o,--out", config.out, "Write results to this file");
  app.add_option("--events-out", config.events_out, "Write GENERATE EVENTS samples to this file");
  app.add_flag("--bench", config.bench, "Run the scaling benchmark instead of a circuit");
  app.add_option("--bench-n-min", config.bench_n_min, "Smallest N of the sweep");
  app.add_option("--bench-n-max", config.bench_n_max, "Largest N of the sweep");
  app.add_option("--bench-ranks", config.bench_ranks, "Rank counts for dist points")->delimiter(',');
  app.add_option("--bench-engines", config.bench_engines, "Engines: exact, encoded, dist, dist-encoded")
      ->delimiter(',');
  app.add_option("--bench-circuits", config.bench_circuits, "Circuits: hadamard, ghz")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qcsim::kExitParse;
  }
  return qcsim::run_command(config, std::cout, std::cerr);
}
