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

#include "qcsim/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <iterator>
#include <new>
#include <sstream>

#include "qcsim/auxvar.hpp"
#include "qcsim/bench.hpp"
#include "qcsim/distributed.hpp"
#include "qcsim/encoded_state.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/shor.hpp"
#include "qcsim/state_vector.hpp"

namespace qcsim {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExecutionError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ExecutionError("cannot write '" + path + "'");
  f << text;
  if (!f) throw ExecutionError("write to '" + path + "' failed");
}

const Instruction* find_shorbox(const Circuit& c) {
  for (const auto& instr : c.instructions) {
    if (instr.opcode == Opcode::kShorbox) return &instr;
  }
  return nullptr;
}

std::string run_auxvar(const RunConfig& config, const Circuit& circuit) {
  const PathProgram program = compile_to_paths(circuit);
  std::vector<Index> basis;
  for (const auto& label : config.query) basis.push_back(parse_basis_label(label, circuit.n_qubits));
  AuxvarStats stats;
  const auto amps = amplitudes(program, basis, &stats);
  if (config.format == "json") {
    nlohmann::json j;
    j["engine"] = "auxvar";
    j["n_qubits"] = circuit.n_qubits;
    j["p_count"] = program.p_count();
    j["cost_estimate"] = cost_estimate(program, basis.size());
    j["peak_bytes"] = stats.peak_bytes;
    j["amplitudes"] = nlohmann::json::array();
    for (std::size_t q = 0; q < basis.size(); ++q) {
      j["amplitudes"].push_back({{"state", format_bitstring(basis[q], circuit.n_qubits)},
                                 {"re", amps[q].real()},
                                 {"im", amps[q].imag()},
                                 {"probability", std::norm(amps[q])}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "P " << program.p_count() << " configurations " << stats.configurations << "\n";
  os << "state <Re> <Im> <|a|^2>\n";
  for (std::size_t q = 0; q < basis.size(); ++q) {
    os << format_bitstring(basis[q], circuit.n_qubits) << ' ' << format_fixed3(amps[q].real()) << ' '
       << format_fixed3(amps[q].imag()) << ' ' << format_fixed3(std::norm(amps[q])) << '\n';
  }
  return os.str();
}

std::string run_state_engine(const RunConfig& config, const Circuit& circuit) {
  RunOptions options;
  if (config.seed) {
    options.seed = *config.seed;
    options.entropy_override = *config.seed;
  }
  RunResult result;
  if (config.engine == "exact") {
    result = run_exact(circuit, options);
  } else if (config.engine == "encoded") {
    result = run_encoded(circuit, options);
  } else {
    DistOptions dist;
    dist.n_high = std::countr_zero(static_cast<unsigned>(config.ranks));
    dist.threads = config.threads;
    dist.slice = config.slice == "encoded" ? SliceKind::kEncoded : SliceKind::kExact;
    result = run_distributed(circuit, dist, options);
  }

  std::optional<ShorOutcome> shor;
  std::optional<ShorParams> shor_in;
  if (const Instruction* box = find_shorbox(circuit); box && result.events) {
    shor_in = shor_params(*box);
    shor = shor_postprocess(x_register_samples(*result.events, shor_in->n_x), *shor_in);
  }
  if (result.events && !config.events_out.empty()) {
    write_file(config.events_out, format_events(*result.events));
  }

  if (config.format == "json") {
    nlohmann::json j = to_json(result);
    if (shor) j["shor"] = to_json(*shor);
    return j.dump(2) + "\n";
  }
  std::string text = format_table(result);
  if (result.events && config.events_out.empty()) text += format_events(*result.events);
  if (shor) text += format_shor(*shor, *shor_in);
  return text;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty()) {
    out << text;
  } else {
    write_file(config.out, text);
  }
}

}  // namespace

void check_config(const RunConfig& c) {
  static const std::vector<std::string> engines{"exact", "encoded", "auxvar", "dist"};
  if (std::find(engines.begin(), engines.end(), c.engine) == engines.end()) {
    throw ValidationError("unknown engine '" + c.engine + "'");
  }
  if (c.format != "table" && c.format != "json") {
    throw ValidationError("unknown format '" + c.format + "'");
  }
  if (c.ranks < 1 || !std::has_single_bit(static_cast<unsigned>(c.ranks))) {
    throw ValidationError("--ranks must be a power of two");
  }
  if (c.slice != "exact" && c.slice != "encoded") {
    throw ValidationError("unknown slice storage '" + c.slice + "'");
  }
  if (c.bench) return;
  if (c.input.empty()) throw ValidationError("--input is required");
  if ((c.engine == "auxvar") != !c.query.empty()) {
    throw ValidationError("--query is required with, and only with, --engine auxvar");
  }
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    if (config.threads > 0) {
      omp_set_num_threads(config.threads);
      kernels::set_thread_budget(config.threads);
    }
    if (config.bench) {
      BenchConfig bc;
      bc.circuits = config.bench_circuits;
      bc.engines = config.bench_engines;
      bc.n_min = config.bench_n_min;
      bc.n_max = config.bench_n_max;
      bc.ranks = config.bench_ranks;
      bc.threads = config.threads;
      const BenchReport report = bench_scaling(bc);
      emit(config, out, config.format == "json" ? report.to_json().dump(2) + "\n" : report.to_csv());
      return kExitOk;
    }
    const Circuit circuit = parse_program(read_input(config.input));
    const ValidationReport report = validate(circuit);
    if (!report.empty()) err << report.to_string();
    if (report.has_errors()) return kExitValidate;
    const std::string text =
        config.engine == "auxvar" ? run_auxvar(config, circuit) : run_state_engine(config, circuit);
    emit(config, out, text);
    return kExitOk;
  } catch (const UnsupportedInstruction& e) {
    if (config.format == "json") {
      err << nlohmann::json{{"error", "unsupported_instruction"},
                            {"instruction", e.mnemonic()},
                            {"line", e.line()},
                            {"message", e.what()}}
                 .dump()
          << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kExitValidate;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.category());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace qcsim
