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

#include "qcsim/bench.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <new>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qcsim/distributed.hpp"
#include "qcsim/encoded_state.hpp"
#include "qcsim/generators.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/state_vector.hpp"

namespace qcsim {

namespace {

Circuit make_circuit(const std::string& name, int n) {
  if (name == "hadamard") return gen_hadamard_wall(n);
  if (name == "ghz") return gen_ghz_chain(n);
  throw std::invalid_argument("bench: unknown circuit '" + name + "'");
}

std::unique_ptr<Backend> make_backend(const std::string& engine, int n, int ranks, int threads) {
  if (engine == "exact") return std::make_unique<ExactBackend>(n);
  if (engine == "encoded") return std::make_unique<EncodedBackend>(n);
  if (engine == "dist" || engine == "dist-encoded") {
    DistOptions opt;
    opt.n_high = std::countr_zero(static_cast<unsigned>(ranks));
    opt.threads = threads;
    opt.slice = engine == "dist" ? SliceKind::kExact : SliceKind::kEncoded;
    return make_distributed(n, opt);
  }
  throw std::invalid_argument("bench: unknown engine '" + engine + "'");
}

BenchPoint run_point(const std::string& circuit_name, const std::string& engine, int n, int ranks,
                     const BenchConfig& config) {
  BenchPoint pt;
  pt.circuit = circuit_name;
  pt.engine = engine;
  pt.n_qubits = n;
  pt.ranks = ranks;
  const Circuit circuit = make_circuit(circuit_name, n);
  double best = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < std::max(1, config.repeats); ++rep) {
    auto backend = make_backend(engine, n, ranks, config.threads);
    std::uint64_t gates = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Instruction& instr : circuit.instructions) {
      if (!is_gate(instr.opcode)) continue;
      backend->apply_gate(instr);
      ++gates;
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pt.gates = gates;
    if (s < best) {
      best = s;
      if (auto* dist = dynamic_cast<DistributedBackend*>(backend.get())) {
        pt.bytes = dist->transport().bytes_sent();
        pt.swaps = dist->swap_count();
        pt.rank_local_seconds = dist->rank_local_seconds();
      }
    }
  }
  pt.seconds = best;
  pt.per_gate = pt.gates > 0 ? best / static_cast<double>(pt.gates) : 0.0;
  return pt;
}

BenchPoint failed_point(const std::string& circuit, const std::string& engine, int n, int ranks,
                        const std::string& error) {
  BenchPoint pt;
  pt.circuit = circuit;
  pt.engine = engine;
  pt.n_qubits = n;
  pt.ranks = ranks;
  pt.error = error;
  return pt;
}

}  // namespace

BenchReport bench_scaling(const BenchConfig& config) {
  if (config.n_min < 2 || config.n_max < config.n_min) {
    throw std::invalid_argument("bench: bad qubit range");
  }
  const kernels::ScopedThreadBudget budget(config.threads > 0 ? config.threads : kernels::thread_budget());
  BenchReport report;
  for (const auto& circuit : config.circuits) {
    for (const auto& engine : config.engines) {
      const bool dist = engine.rfind("dist", 0) == 0;
      const std::vector<int> rank_list = dist ? config.ranks : std::vector<int>{1};
      for (int ranks : rank_list) {
        for (int n = config.n_min; n <= config.n_max; ++n) {
          try {
            if (dist && static_cast<int>(std::bit_width(static_cast<unsigned>(ranks))) - 1 >= n) {
              throw std::invalid_argument("too many ranks for N");
            }
            report.points.push_back(run_point(circuit, engine, n, ranks, config));
          } catch (const std::bad_alloc&) {
            report.points.push_back(failed_point(circuit, engine, n, ranks, "out of memory"));
          } catch (const ResourceError& e) {
            report.points.push_back(failed_point(circuit, engine, n, ranks, e.what()));
          } catch (const std::invalid_argument& e) {
            report.points.push_back(failed_point(circuit, engine, n, ranks, e.what()));
          }
        }
      }
    }
  }
  // Normalize each (circuit, engine, ranks) series by its smallest N.
  std::map<std::tuple<std::string, std::string, int>, double> base;
  for (const auto& p : report.points) {
    if (!p.error.empty() || p.per_gate <= 0.0) continue;
    base.try_emplace({p.circuit, p.engine, p.ranks}, p.per_gate);
  }
  for (auto& p : report.points) {
    auto it = base.find({p.circuit, p.engine, p.ranks});
    if (p.error.empty() && it != base.end()) p.normalized = p.per_gate / it->second;
  }
  return report;
}

std::string BenchReport::to_csv() const {
  std::ostringstream os;
  os << "circuit,engine,n,ranks,gates,seconds,per_gate,normalized,bytes,swaps,error\n";
  for (const auto& p : points) {
    os << p.circuit << ',' << p.engine << ',' << p.n_qubits << ',' << p.ranks << ',' << p.gates << ','
       << p.seconds << ',' << p.per_gate << ',' << p.normalized << ',' << p.bytes << ',' << p.swaps << ','
       << p.error << '\n';
  }
  return os.str();
}

nlohmann::json BenchReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points) {
    arr.push_back({{"circuit", p.circuit},
                   {"engine", p.engine},
                   {"n", p.n_qubits},
                   {"ranks", p.ranks},
                   {"gates", p.gates},
                   {"seconds", p.seconds},
                   {"per_gate", p.per_gate},
                   {"normalized", p.normalized},
                   {"bytes", p.bytes},
                   {"swaps", p.swaps},
                   {"rank_local_seconds", p.rank_local_seconds},
                   {"error", p.error}});
  }
  return {{"points", arr}};
}

double growth_factor(const std::vector<std::pair<int, double>>& n_and_time) {
  if (n_and_time.size() < 2) throw std::invalid_argument("growth_factor: need two points");
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  const double k = static_cast<double>(n_and_time.size());
  for (const auto& [n, t] : n_and_time) {
    const double x = n;
    const double y = std::log(t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return std::exp(slope);
}

}  // namespace qcsim
