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

#include "qcsim/run_result.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qcsim {

std::string format_fixed3(double value) {
  // std::round rounds half away from zero.
  const double scaled = std::round(value * 1000.0);
  long long milli = static_cast<long long>(scaled);
  std::string sign;
  if (milli < 0) {
    sign = "-";
    milli = -milli;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%03lld", milli / 1000, milli % 1000);
  return sign + buf;
}

std::string format_triplet(const QubitExpectation& e) {
  return format_fixed3(e.qx) + " " + format_fixed3(e.qy) + " " + format_fixed3(e.qz);
}

std::string format_expectations(const MeasurementRecord& record) {
  std::string out = "qubit <Qx> <Qy> <Qz>\n";
  char buf[16];
  for (std::size_t q = 0; q < record.qubits.size(); ++q) {
    std::snprintf(buf, sizeof(buf), "%5zu ", q);
    out += buf;
    out += format_triplet(record.qubits[q]);
    out += '\n';
  }
  return out;
}

std::string format_bitstring(Index state, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((state >> q) & 1U) s[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
  }
  return s;
}

std::string format_events(const EventList& events) {
  std::string out;
  out.reserve(events.events.size() * static_cast<std::size_t>(events.n_qubits + 1));
  for (Index e : events.events) {
    out += format_bitstring(e, events.n_qubits);
    out += '\n';
  }
  return out;
}

std::string format_table(const RunResult& result) {
  std::string out;
  for (const auto& m : result.measurements) {
    if (m.at_exit) {
      out += "EXIT";
    } else {
      out += "BEGIN MEASUREMENT";
    }
    if (m.line > 0) out += " (line " + std::to_string(m.line) + ")";
    out += '\n';
    out += format_expectations(m.record);
  }
  for (const auto& p : result.projections) {
    out += "M " + std::to_string(p.qubit) + " -> " + std::to_string(p.outcome);
    if (p.line > 0) out += " (line " + std::to_string(p.line) + ")";
    out += '\n';
  }
  if (result.events) {
    out += "GENERATE EVENTS " + std::to_string(result.events->events.size()) + " seed " +
           std::to_string(result.events->seed) + '\n';
  }
  return out;
}

nlohmann::json to_json(const MeasurementRecord& record) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t q = 0; q < record.qubits.size(); ++q) {
    const auto& e = record.qubits[q];
    rows.push_back({{"qubit", q}, {"qx", e.qx}, {"qy", e.qy}, {"qz", e.qz}});
  }
  return rows;
}

nlohmann::json to_json(const RunResult& result) {
  nlohmann::json j;
  j["engine"] = result.engine;
  j["n_qubits"] = result.n_qubits;
  j["exited"] = result.exited;
  j["measurements"] = nlohmann::json::array();
  for (const auto& m : result.measurements) {
    j["measurements"].push_back(
        {{"line", m.line}, {"at_exit", m.at_exit}, {"expectations", to_json(m.record)}});
  }
  j["projections"] = nlohmann::json::array();
  for (const auto& p : result.projections) {
    j["projections"].push_back({{"line", p.line}, {"qubit", p.qubit}, {"outcome", p.outcome}});
  }
  if (result.events) {
    nlohmann::json states = nlohmann::json::array();
    for (Index e : result.events->events) states.push_back(format_bitstring(e, result.n_qubits));
    j["events"] = {{"seed", result.events->seed}, {"count", result.events->events.size()},
                   {"states", std::move(states)}};
  }
  j["diagnostics"] = result.diagnostics;
  return j;
}

}  // namespace qcsim
