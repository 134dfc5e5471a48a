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
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qcsim {

struct BenchConfig {
  std::vector<std::string> circuits{"hadamard", "ghz"};
  std::vector<std::string> engines{"exact"};  // exact | encoded | dist
  int n_min = 16;
  int n_max = 20;
  std::vector<int> ranks{1};  // used by the dist engine
  int threads = 0;
  int repeats = 1;  // best of
};

struct BenchPoint {
  std::string circuit;
  std::string engine;
  int n_qubits = 0;
  int ranks = 1;
  std::uint64_t gates = 0;
  double seconds = 0.0;
  double per_gate = 0.0;
  double normalized = 0.0;  // per_gate / per_gate at the smallest N of the series
  std::uint64_t bytes = 0;
  std::uint64_t swaps = 0;
  std::vector<double> rank_local_seconds;
  std::string error;  // nonempty when the point could not run
};

struct BenchReport {
  std::vector<BenchPoint> points;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

/// Times the gate sequence of each generator circuit (measurement excluded)
/// across N, engines and rank counts. Points that run out of memory are
/// reported, not fatal.
BenchReport bench_scaling(const BenchConfig& config);

/// exp of the least-squares slope of log(time) against N: the fitted growth
/// factor per added qubit.
double growth_factor(const std::vector<std::pair<int, double>>& n_and_time);

}  // namespace qcsim
