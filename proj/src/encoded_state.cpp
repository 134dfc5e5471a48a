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

#include "qcsim/encoded_state.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <string>

#include "qcsim/bits.hpp"
#include "qcsim/shor.hpp"
#include "qcsim/state_vector.hpp"

namespace qcsim {

Bounds choose_bounds(const Bounds& current, const MagnitudeRange& range) {
  if (!range.any()) return Bounds{};
  const double step = current.step();
  if (range.lo >= current.r0 - step && range.hi <= current.r1 + step) return current;
  return Bounds{range.lo, std::min(range.hi, 1.0)};
}

std::optional<MonomialGate> as_monomial(const GateMatrix& u) {
  MonomialGate g;
  g.dim = u.dim;
  std::array<bool, 8> used{};
  for (int r = 0; r < u.dim; ++r) {
    int col = -1;
    for (int c = 0; c < u.dim; ++c) {
      if (u(r, c) == Complex(0.0)) continue;
      if (col >= 0) return std::nullopt;
      col = c;
    }
    if (col < 0 || used[static_cast<std::size_t>(col)]) return std::nullopt;
    if (std::abs(std::abs(u(r, col)) - 1.0) > 1e-12) return std::nullopt;
    used[static_cast<std::size_t>(col)] = true;
    g.source[static_cast<std::size_t>(r)] = col;
    const Complex v = u(r, col);
    g.offset[static_cast<std::size_t>(r)] = phase_code(std::atan2(v.imag(), v.real()));
  }
  return g;
}

namespace encoded {

namespace {

template <int D>
void monomial_groups(EncodedAmplitude* codes, Index size, const MonomialGate& g,
                     std::span<const int> positions) {
  constexpr int K = D == 2 ? 1 : (D == 4 ? 2 : 3);
  std::array<int, K> pos{};
  for (int k = 0; k < K; ++k) pos[static_cast<std::size_t>(k)] = positions[static_cast<std::size_t>(k)];
  const auto sorted = bits::sorted(pos);
  std::array<Index, D> offsets{};
  for (int r = 0; r < D; ++r) {
    Index o = 0;
    for (int k = 0; k < K; ++k) {
      if ((r >> (K - 1 - k)) & 1) o |= bits::pow2(pos[static_cast<std::size_t>(k)]);
    }
    offsets[static_cast<std::size_t>(r)] = o;
  }
  std::array<bool, D> touched{};
  for (int r = 0; r < D; ++r) {
    touched[static_cast<std::size_t>(r)] =
        g.source[static_cast<std::size_t>(r)] != r || g.offset[static_cast<std::size_t>(r)] != 0;
  }
  const Index groups = size / D;
#pragma omp parallel for schedule(static) num_threads(kernels::thread_budget())
  for (Index grp = 0; grp < groups; ++grp) {
    const Index base = bits::insert_zeros(grp, sorted);
    EncodedAmplitude in[D];
    for (int c = 0; c < D; ++c) in[c] = codes[base | offsets[static_cast<std::size_t>(c)]];
    for (int r = 0; r < D; ++r) {
      if (!touched[static_cast<std::size_t>(r)]) continue;
      codes[base | offsets[static_cast<std::size_t>(r)]] =
          shift_phase(in[g.source[static_cast<std::size_t>(r)]], g.offset[static_cast<std::size_t>(r)]);
    }
  }
}

inline bool is_zero(EncodedAmplitude c) { return c.b0 == kCodeZero; }

template <typename F>
kernels::PairMoments chunked_pairs(Index pairs, F&& chunk) {
  const Index chunks = (pairs + kernels::kReductionChunk - 1) / kernels::kReductionChunk;
  std::vector<kernels::PairMoments> partials(chunks);
#pragma omp parallel for schedule(static) num_threads(kernels::thread_budget())
  for (Index c = 0; c < chunks; ++c) {
    partials[c] = chunk(c * kernels::kReductionChunk,
                        std::min(pairs, (c + 1) * kernels::kReductionChunk));
  }
  kernels::PairMoments total;
  for (const auto& p : partials) {
    total.p0 += p.p0;
    total.p1 += p.p1;
    total.overlap += p.overlap;
  }
  return total;
}

}  // namespace

void apply_monomial(std::span<EncodedAmplitude> codes, const MonomialGate& g,
                    std::span<const int> positions) {
  switch (g.dim) {
    case 2:
      return monomial_groups<2>(codes.data(), codes.size(), g, positions);
    case 4:
      return monomial_groups<4>(codes.data(), codes.size(), g, positions);
    default:
      return monomial_groups<8>(codes.data(), codes.size(), g, positions);
  }
}

MagnitudeRange prescan_single(std::span<const EncodedAmplitude> codes, int j, const GateMatrix& u,
                              const Decoder& in) {
  const EncodedAmplitude* c = codes.data();
  const Index pairs = codes.size() / 2;
  const Index bit = bits::pow2(j);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : lo) reduction(max : hi) \
    num_threads(kernels::thread_budget())
  for (Index g = 0; g < pairs; ++g) {
    const Index i0 = bits::insert_zero(g, j);
    const EncodedAmplitude c0 = c[i0];
    const EncodedAmplitude c1 = c[i0 | bit];
    if (is_zero(c0) && is_zero(c1)) continue;
    const Complex a0 = in(c0);
    const Complex a1 = in(c1);
    for (int r = 0; r < 2; ++r) {
      const double m = std::sqrt(std::norm(u(r, 0) * a0 + u(r, 1) * a1));
      if (!is_intermediate(m) || m > 1.0) continue;
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  MagnitudeRange range;
  range.lo = lo;
  range.hi = hi;
  return range;
}

void transform_single(std::span<EncodedAmplitude> codes, int j, const GateMatrix& u,
                      const Decoder& in, const Encoder& out) {
  EncodedAmplitude* c = codes.data();
  const Index pairs = codes.size() / 2;
  const Index bit = bits::pow2(j);
#pragma omp parallel for schedule(static) num_threads(kernels::thread_budget())
  for (Index g = 0; g < pairs; ++g) {
    const Index i0 = bits::insert_zero(g, j);
    const EncodedAmplitude c0 = c[i0];
    const EncodedAmplitude c1 = c[i0 | bit];
    if (is_zero(c0) && is_zero(c1)) continue;
    const Complex a0 = in(c0);
    const Complex a1 = in(c1);
    c[i0] = out(u(0, 0) * a0 + u(0, 1) * a1);
    c[i0 | bit] = out(u(1, 0) * a0 + u(1, 1) * a1);
  }
}

MagnitudeRange magnitude_range(std::span<const EncodedAmplitude> codes, const Decoder& in) {
  const EncodedAmplitude* c = codes.data();
  const Index n = codes.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : lo) reduction(max : hi) \
    num_threads(kernels::thread_budget())
  for (Index i = 0; i < n; ++i) {
    if (c[i].b0 == kCodeZero || c[i].b0 == kCodeOne) continue;
    const double m = in.magnitude(c[i]);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  MagnitudeRange range;
  range.lo = lo;
  range.hi = hi;
  return range;
}

void reencode(std::span<EncodedAmplitude> codes, const Decoder& in, const Encoder& out) {
  EncodedAmplitude* c = codes.data();
  const Index n = codes.size();
#pragma omp parallel for schedule(static) num_threads(kernels::thread_budget())
  for (Index i = 0; i < n; ++i) {
    if (c[i].b0 == kCodeZero || c[i].b0 == kCodeOne) continue;
    c[i].b0 = magnitude_code(in.magnitude(c[i]), out.bounds());
  }
}

kernels::PairMoments pair_moments(std::span<const EncodedAmplitude> codes, int j, const Decoder& in) {
  const EncodedAmplitude* c = codes.data();
  const Index bit = bits::pow2(j);
  return chunked_pairs(codes.size() / 2, [&](Index begin, Index end) {
    kernels::PairMoments m;
    double re = 0.0;
    double im = 0.0;
    for (Index g = begin; g < end; ++g) {
      const Index i0 = bits::insert_zero(g, j);
      const EncodedAmplitude c0 = c[i0];
      const EncodedAmplitude c1 = c[i0 | bit];
      if (is_zero(c0) && is_zero(c1)) continue;
      const Complex a0 = in(c0);
      const Complex a1 = in(c1);
      m.p0 += std::norm(a0);
      m.p1 += std::norm(a1);
      re += a0.real() * a1.real() + a0.imag() * a1.imag();
      im += a0.real() * a1.imag() - a0.imag() * a1.real();
    }
    m.overlap = Complex(re, im);
    return m;
  });
}

double norm_squared(std::span<const EncodedAmplitude> codes, const Decoder& in) {
  const auto m = pair_moments(codes, 0, in);
  return m.p0 + m.p1;
}

std::vector<double> block_masses(std::span<const EncodedAmplitude> codes, Index block,
                                 const Decoder& in) {
  const Index blocks = codes.size() / block;
  std::vector<double> mass(blocks);
  const EncodedAmplitude* c = codes.data();
#pragma omp parallel for schedule(static) num_threads(kernels::thread_budget())
  for (Index b = 0; b < blocks; ++b) {
    double s = 0.0;
    for (Index i = b * block; i < (b + 1) * block; ++i) {
      const double r = in.magnitude(c[i]);
      s += r * r;
    }
    mass[b] = s;
  }
  return mass;
}

Index scan_block(std::span<const EncodedAmplitude> block_codes, double residual, const Decoder& in) {
  double running = 0.0;
  Index last_nonzero = 0;
  for (Index i = 0; i < block_codes.size(); ++i) {
    const double r = in.magnitude(block_codes[i]);
    if (r == 0.0) continue;
    running += r * r;
    last_nonzero = i;
    if (running > residual) return i;
  }
  return last_nonzero;
}

void swap_bits(std::span<EncodedAmplitude> codes, int a, int b) {
  if (a == b) return;
  EncodedAmplitude* c = codes.data();
  const Index groups = codes.size() / 4;
  const auto sorted = bits::sorted(std::array<int, 2>{a, b});
  const Index ma = bits::pow2(a);
  const Index mb = bits::pow2(b);
#pragma omp parallel for schedule(static) num_threads(kernels::thread_budget())
  for (Index g = 0; g < groups; ++g) {
    const Index base = bits::insert_zeros(g, sorted);
    std::swap(c[base | ma], c[base | mb]);
  }
}

}  // namespace encoded

EncodedState::EncodedState(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("qubit count out of range: " + std::to_string(n_qubits));
  }
  try {
    if (n_qubits > 60) throw std::bad_alloc();
    codes_.resize(std::size_t{1} << n_qubits);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate encoded state of " + std::to_string(n_qubits) +
                        " qubits (" + std::to_string(n_qubits > 61 ? 0 : bytes_required(n_qubits)) +
                        " bytes required)");
  } catch (const std::length_error&) {
    throw ResourceError("cannot allocate encoded state of " + std::to_string(n_qubits) + " qubits");
  }
  codes_[0] = {kCodeOne, 0};
  history_.push_back(bounds_);
}

void EncodedState::set_bounds(const Bounds& b) {
  if (b == bounds_) return;
  bounds_ = b;
  constexpr std::size_t kMaxHistory = 4096;
  if (history_.size() < kMaxHistory) history_.push_back(b);
}

std::vector<Complex> EncodedState::decoded() const {
  const Decoder dec(bounds_);
  std::vector<Complex> out(codes_.size());
  for (Index i = 0; i < codes_.size(); ++i) out[i] = dec(codes_[i]);
  return out;
}

void EncodedState::apply(const Instruction& instr) {
  if (instr.opcode == Opcode::kI) return;
  const GateMatrix u = gate_matrix(instr);
  if (auto mono = as_monomial(u)) {
    encoded::apply_monomial(codes_, *mono, instr.qubits);
    ++monomial_gates_;
    return;
  }
  if (u.dim != 2) {
    throw ExecutionError("encoded engine: unsupported dense multi-qubit gate " +
                         std::string(mnemonic(instr.opcode)));
  }
  apply_matrix(instr.qubits.at(0), u);
}

void EncodedState::apply_matrix(int j, const GateMatrix& u) {
  const Decoder in(bounds_);
  const Bounds next = choose_bounds(bounds_, encoded::prescan_single(codes_, j, u, in));
  encoded::transform_single(codes_, j, u, in, Encoder(next));
  set_bounds(next);
  ++transform_gates_;
}

void EncodedState::rescale() {
  const Decoder in(bounds_);
  const MagnitudeRange range = encoded::magnitude_range(codes_, in);
  const Bounds next = range.any() ? Bounds{range.lo, range.hi} : Bounds{};
  encoded::reencode(codes_, in, Encoder(next));
  set_bounds(next);
}

QubitExpectation EncodedState::expectation(int qubit) const {
  return normalized_expectation(encoded::pair_moments(codes_, qubit, Decoder(bounds_)));
}

MeasurementRecord EncodedState::expectations() const {
  MeasurementRecord rec;
  for (int q = 0; q < n_; ++q) rec.qubits.push_back(expectation(q));
  return rec;
}

std::pair<double, double> EncodedState::branch_weights(int qubit) const {
  const auto m = encoded::pair_moments(codes_, qubit, Decoder(bounds_));
  return {m.p0, m.p1};
}

void EncodedState::project(int qubit, int bit, double scale) {
  apply_matrix(qubit, bit ? GateMatrix::diagonal({0.0, scale}) : GateMatrix::diagonal({scale, 0.0}));
}

std::vector<Index> EncodedState::generate_events(std::int64_t count, Rng& rng) const {
  const Decoder dec(bounds_);
  const Index block = sampling_block(size());
  const auto mass = encoded::block_masses(codes_, block, dec);
  return sample_blocks(mass, block, count, rng, [&](std::size_t b, double residual) {
    return encoded::scan_block(std::span<const EncodedAmplitude>(codes_).subspan(b * block, block),
                               residual, dec);
  });
}

void EncodedState::shorbox(const ShorParams& params) {
  check_shorbox(n_, params);
  const bool zero_state =
      codes_[0] == EncodedAmplitude{kCodeOne, 0} &&
      std::all_of(codes_.begin() + 1, codes_.end(), [](EncodedAmplitude c) { return c.b0 == kCodeZero; });
  if (!zero_state) throw ExecutionError("SHORBOX requires the state |0...0>");
  const double amp = std::pow(2.0, -0.5 * params.n_x);
  set_bounds(Bounds{amp, amp});
  const EncodedAmplitude code = Encoder(bounds_)(Complex(amp));
  codes_[0] = {kCodeZero, 0};
  for_each_shor_state(params, [&](Index i) { codes_[i] = code; });
}

nlohmann::json EncodedBackend::diagnostics() const {
  nlohmann::json j;
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& b : state_.bounds_history()) hist.push_back({b.r0, b.r1});
  j["bounds_history"] = std::move(hist);
  j["bounds"] = {state_.bounds().r0, state_.bounds().r1};
  j["monomial_gates"] = state_.monomial_gates();
  j["transform_gates"] = state_.transform_gates();
  j["state_bytes"] = state_.storage_bytes();
  return j;
}

RunResult run_encoded(const Circuit& circuit, const RunOptions& options) {
  EncodedBackend backend(circuit.n_qubits);
  return run_circuit(circuit, backend, options);
}

}  // namespace qcsim
