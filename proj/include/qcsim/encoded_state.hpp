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

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "qcsim/encoding.hpp"
#include "qcsim/gates.hpp"
#include "qcsim/interpreter.hpp"
#include "qcsim/kernels.hpp"

namespace qcsim {

/// Smallest and largest intermediate magnitude seen by a scan.
struct MagnitudeRange {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  bool any() const { return lo <= hi; }
  void add(double r) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  void merge(const MagnitudeRange& o) {
    lo = std::min(lo, o.lo);
    hi = std::max(hi, o.hi);
  }
};

/// Bounds after a transform whose outputs span `range`: unchanged while the
/// outputs stay within one code step of the current bounds, otherwise the
/// tight range (or the sentinel when nothing intermediate remains).
Bounds choose_bounds(const Bounds& current, const MagnitudeRange& range);

/// Gate whose matrix has one unit-magnitude entry per row and column: it
/// moves codes and shifts phases, without decoding.
struct MonomialGate {
  int dim = 2;
  std::array<int, 8> source{};          // output row r reads input source[r]
  std::array<std::int8_t, 8> offset{};  // phase code added to that input
};

std::optional<MonomialGate> as_monomial(const GateMatrix& u);

// Operations on a slice of codes. Bit positions are slice positions.
namespace encoded {

void apply_monomial(std::span<EncodedAmplitude> codes, const MonomialGate& g,
                    std::span<const int> positions);

/// Range of the output magnitudes u (a0, a1) would produce on qubit j.
MagnitudeRange prescan_single(std::span<const EncodedAmplitude> codes, int j, const GateMatrix& u,
                              const Decoder& in);

/// Decodes each pair, applies u, re-encodes with `out`.
void transform_single(std::span<EncodedAmplitude> codes, int j, const GateMatrix& u,
                      const Decoder& in, const Encoder& out);

MagnitudeRange magnitude_range(std::span<const EncodedAmplitude> codes, const Decoder& in);
void reencode(std::span<EncodedAmplitude> codes, const Decoder& in, const Encoder& out);

kernels::PairMoments pair_moments(std::span<const EncodedAmplitude> codes, int j, const Decoder& in);
double norm_squared(std::span<const EncodedAmplitude> codes, const Decoder& in);
std::vector<double> block_masses(std::span<const EncodedAmplitude> codes, Index block,
                                 const Decoder& in);
Index scan_block(std::span<const EncodedAmplitude> block_codes, double residual, const Decoder& in);
void swap_bits(std::span<EncodedAmplitude> codes, int a, int b);

}  // namespace encoded

/// 2^N amplitudes at 2 bytes each plus global magnitude bounds.
class EncodedState {
 public:
  explicit EncodedState(int n_qubits);

  static std::uint64_t bytes_required(int n_qubits) { return std::uint64_t{2} << n_qubits; }

  int n_qubits() const { return n_; }
  Index size() const { return codes_.size(); }
  std::span<EncodedAmplitude> codes() { return codes_; }
  std::span<const EncodedAmplitude> codes() const { return codes_; }
  std::size_t storage_bytes() const { return codes_.size() * sizeof(EncodedAmplitude); }
  const Bounds& bounds() const { return bounds_; }
  const std::vector<Bounds>& bounds_history() const { return history_; }

  Complex amplitude(Index i) const { return decode(codes_[i], bounds_); }
  std::vector<Complex> decoded() const;

  void apply(const Instruction& instr);
  /// Two-pass magnitude-changing update of qubit j by any 2x2 matrix.
  void apply_matrix(int j, const GateMatrix& u);
  /// Recomputes the bounds from the decoded state and re-encodes everything.
  void rescale();

  QubitExpectation expectation(int qubit) const;
  MeasurementRecord expectations() const;
  std::pair<double, double> branch_weights(int qubit) const;
  void project(int qubit, int bit, double scale);
  std::vector<Index> generate_events(std::int64_t count, Rng& rng) const;
  void shorbox(const ShorParams& params);

  /// Fast-path statistics, for diagnostics.
  std::uint64_t monomial_gates() const { return monomial_gates_; }
  std::uint64_t transform_gates() const { return transform_gates_; }

 private:
  void set_bounds(const Bounds& b);

  int n_;
  std::vector<EncodedAmplitude> codes_;
  Bounds bounds_;
  std::vector<Bounds> history_;
  std::uint64_t monomial_gates_ = 0;
  std::uint64_t transform_gates_ = 0;
};

class EncodedBackend final : public Backend {
 public:
  explicit EncodedBackend(int n_qubits) : state_(n_qubits) {}

  std::string_view name() const override { return "encoded"; }
  int n_qubits() const override { return state_.n_qubits(); }
  void apply_gate(const Instruction& instr) override { state_.apply(instr); }
  MeasurementRecord expectations() override { return state_.expectations(); }
  std::pair<double, double> branch_weights(int qubit) override { return state_.branch_weights(qubit); }
  void project(int qubit, int bit, double scale) override { state_.project(qubit, bit, scale); }
  std::vector<Index> sample(std::int64_t count, Rng& rng) override {
    return state_.generate_events(count, rng);
  }
  void shorbox(const ShorParams& params) override { state_.shorbox(params); }
  nlohmann::json diagnostics() const override;

  EncodedState& state() { return state_; }

 private:
  EncodedState state_;
};

RunResult run_encoded(const Circuit& circuit, const RunOptions& options = {});

}  // namespace qcsim
