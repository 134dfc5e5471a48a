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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcsim/types.hpp"

namespace qcsim {

/// <Q(n)> = <Psi|(1 - sigma(n))|Psi>/2 for the three axes.
struct QubitExpectation {
  double qx = 0.0;
  double qy = 0.0;
  double qz = 0.0;
};

struct MeasurementRecord {
  std::vector<QubitExpectation> qubits;
};

struct EventList {
  int n_qubits = 0;
  std::uint64_t seed = 0;
  std::vector<Index> events;
};

struct MeasurementSnapshot {
  int line = 0;
  bool at_exit = false;
  MeasurementRecord record;
};

struct ProjectionOutcome {
  int line = 0;
  int qubit = 0;
  int outcome = 0;
};

struct RunResult {
  int n_qubits = 0;
  std::string engine;
  std::vector<MeasurementSnapshot> measurements;
  std::vector<ProjectionOutcome> projections;
  std::optional<EventList> events;
  bool exited = false;
  nlohmann::json diagnostics = nlohmann::json::object();
};

/// Three decimals, rounded half away from zero, locale independent.
std::string format_fixed3(double value);

/// "0.000 0.500 0.500"
std::string format_triplet(const QubitExpectation& e);

/// One row per qubit: index, <Qx>, <Qy>, <Qz>.
std::string format_expectations(const MeasurementRecord& record);

/// Basis label with qubit N-1 leftmost.
std::string format_bitstring(Index state, int n_qubits);

/// One bitstring per line.
std::string format_events(const EventList& events);

/// The text table output of a run.
std::string format_table(const RunResult& result);

nlohmann::json to_json(const MeasurementRecord& record);
nlohmann::json to_json(const RunResult& result);

}  // namespace qcsim
