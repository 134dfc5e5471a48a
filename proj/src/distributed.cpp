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

#include "qcsim/distributed.hpp"

#include <time.h>

#include <algorithm>
#include <condition_variable>
#include <cstring>
#include <exception>
#include <functional>
#include <mutex>
#include <new>
#include <string>
#include <thread>
#include <type_traits>

#include <omp.h>

#include "qcsim/bits.hpp"
#include "qcsim/encoded_state.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/shor.hpp"
#include "qcsim/state_vector.hpp"

namespace qcsim {

RankLayout partition(int n_qubits, int n_high) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("qubit count out of range: " + std::to_string(n_qubits));
  }
  if (n_high < 0 || n_high >= n_qubits) {
    throw ValidationError("partition: need 0 <= N_h < N (N=" + std::to_string(n_qubits) +
                          ", N_h=" + std::to_string(n_high) + ")");
  }
  RankLayout l;
  l.n_qubits = n_qubits;
  l.n_high = n_high;
  l.n_low = n_qubits - n_high;
  l.k_high = bits::pow2(n_high);
  l.k_low = bits::pow2(l.n_low);
  return l;
}

namespace {

double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

// One persistent worker thread per rank. run() hands the same job to every
// rank and returns once all of them finished.
class RankPool {
 public:
  RankPool(int ranks, int threads_per_rank) : threads_per_rank_(threads_per_rank) {
    for (int r = 0; r < ranks; ++r) workers_.emplace_back([this, r] { loop(r); });
  }

  ~RankPool() {
    {
      std::lock_guard lock(mutex_);
      stop_ = true;
    }
    start_.notify_all();
    for (auto& t : workers_) t.join();
  }

  RankPool(const RankPool&) = delete;
  RankPool& operator=(const RankPool&) = delete;

  void run(const std::function<void(int)>& job) {
    std::unique_lock lock(mutex_);
    job_ = &job;
    pending_ = static_cast<int>(workers_.size());
    error_ = nullptr;
    ++generation_;
    start_.notify_all();
    done_.wait(lock, [&] { return pending_ == 0; });
    job_ = nullptr;
    if (error_) std::rethrow_exception(error_);
  }

 private:
  void loop(int rank) {
    kernels::set_thread_budget(threads_per_rank_);
    std::uint64_t seen = 0;
    for (;;) {
      const std::function<void(int)>* job = nullptr;
      {
        std::unique_lock lock(mutex_);
        start_.wait(lock, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        job = job_;
      }
      std::exception_ptr err;
      try {
        (*job)(rank);
      } catch (...) {
        err = std::current_exception();
      }
      std::lock_guard lock(mutex_);
      if (err && !error_) error_ = err;
      if (--pending_ == 0) done_.notify_all();
    }
  }

  int threads_per_rank_;
  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable start_;
  std::condition_variable done_;
  const std::function<void(int)>* job_ = nullptr;
  std::uint64_t generation_ = 0;
  int pending_ = 0;
  bool stop_ = false;
  std::exception_ptr error_;
};

template <typename Elem>
class DistEngine final : public DistributedBackend {
  static constexpr bool kEncoded = std::is_same_v<Elem, EncodedAmplitude>;

 public:
  DistEngine(int n_qubits, const DistOptions& options)
      : layout_(partition(n_qubits, options.n_high)),
        perm_(BitPermutation::identity(n_qubits)),
        transport_(static_cast<int>(layout_.k_high)),
        local_seconds_(layout_.k_high, 0.0),
        local_updates_(layout_.k_high, 0) {
    const int ranks = static_cast<int>(layout_.k_high);
    const int total_threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    threads_per_rank_ = std::max(1, total_threads / ranks);
    std::uint64_t buffer = options.buffer_bytes;
    if (buffer == 0) buffer = n_qubits >= 3 ? (std::uint64_t{1} << (n_qubits - 3)) / layout_.k_high : 1;
    buffer_elems_ = std::max<Index>(1, buffer / sizeof(Elem));
    buffer_bytes_ = buffer_elems_ * sizeof(Elem);
    try {
      slices_.resize(layout_.k_high);
      for (auto& s : slices_) s.resize(layout_.k_low);
    } catch (const std::bad_alloc&) {
      throw ResourceError("cannot allocate distributed state of " + std::to_string(n_qubits) +
                          " qubits (" + std::to_string(layout_.k_low * sizeof(Elem)) +
                          " bytes per rank, " + std::to_string(layout_.k_high) + " ranks)");
    }
    if constexpr (kEncoded) {
      slices_[0][0] = {kCodeOne, 0};
      history_.push_back(bounds_);
    } else {
      slices_[0][0] = 1.0;
    }
    pool_ = std::make_unique<RankPool>(ranks, threads_per_rank_);
  }

  std::string_view name() const override { return "dist"; }
  int n_qubits() const override { return layout_.n_qubits; }
  const RankLayout& layout() const override { return layout_; }
  const BitPermutation& permutation() const override { return perm_; }
  const Transport& transport() const override { return transport_; }
  std::uint64_t swap_count() const override { return swaps_; }
  std::vector<double> rank_local_seconds() const override { return local_seconds_; }
  std::vector<std::uint64_t> rank_local_updates() const override { return local_updates_; }

  void set_bit_assignment(const BitPermutation& assignment) override {
    if (assignment.size() == 0) return;
    if (assignment.size() != layout_.n_qubits) {
      throw ValidationError("BIT ASSIGNMENT size does not match the register");
    }
    if (!is_basis_zero()) throw ExecutionError("BIT ASSIGNMENT requires the initial state");
    // The initial state |0...0> is invariant under relabeling.
    perm_ = assignment;
  }

  void apply_gate(const Instruction& instr) override {
    ++instr_counter_;
    const std::uint64_t before = transport_.bytes_sent();
    if (instr.opcode != Opcode::kI) {
      std::vector<int> pos = localize(instr);
      apply_local(instr, pos);
    }
    record_bytes(instr, transport_.bytes_sent() - before);
  }

  MeasurementRecord expectations() override {
    ++instr_counter_;
    const std::uint64_t before = transport_.bytes_sent();
    MeasurementRecord rec;
    for (int q = 0; q < layout_.n_qubits; ++q) {
      // Encoded slices drift in norm like the single-rank encoded state.
      if constexpr (kEncoded) {
        rec.qubits.push_back(normalized_expectation(moments(q)));
      } else {
        rec.qubits.push_back(expectation_from_moments(moments(q)));
      }
    }
    record_bytes_named("BEGIN MEASUREMENT", 0, transport_.bytes_sent() - before);
    return rec;
  }

  std::pair<double, double> branch_weights(int qubit) override {
    const int p = perm_[qubit];
    std::vector<kernels::PairMoments> part(layout_.k_high);
    if (p < layout_.n_low) {
      pool_->run([&](int r) { part[static_cast<std::size_t>(r)] = local_moments(r, p); });
    } else {
      pool_->run([&](int r) {
        const double norm = slice_norm(r);
        auto& m = part[static_cast<std::size_t>(r)];
        (bits::test(static_cast<Index>(r), p - layout_.n_low) ? m.p1 : m.p0) = norm;
      });
    }
    double p0 = 0.0;
    double p1 = 0.0;
    for (const auto& m : part) {
      p0 += m.p0;
      p1 += m.p1;
    }
    return {p0, p1};
  }

  void project(int qubit, int bit, double scale) override {
    const int p = perm_[qubit];
    const bool local = p < layout_.n_low;
    auto keeps_rank = [&](int r) {
      return local || static_cast<int>(bits::test(static_cast<Index>(r), p - layout_.n_low)) == bit;
    };
    if constexpr (kEncoded) {
      const GateMatrix u = local ? (bit ? GateMatrix::diagonal({0.0, scale}) : GateMatrix::diagonal({scale, 0.0}))
                                 : GateMatrix::diagonal({scale, scale});
      const int j = local ? p : 0;
      transform_all(u, j, keeps_rank);
    } else {
      pool_->run([&](int r) {
        auto& s = slices_[static_cast<std::size_t>(r)];
        if (local) {
          kernels::omp::project(s, p, bit, scale);
        } else if (keeps_rank(r)) {
          kernels::omp::scale(s, scale);
        } else {
          std::fill(s.begin(), s.end(), Complex(0.0));
        }
      });
    }
  }

  std::vector<Index> sample(std::int64_t count, Rng& rng) override {
    restore_identity();
    const Index block = std::min<Index>(4096, layout_.k_low);
    const Index per_rank = layout_.k_low / block;
    std::vector<double> mass(layout_.k_high * per_rank);
    pool_->run([&](int r) {
      std::vector<double> m;
      if constexpr (kEncoded) {
        m = encoded::block_masses(slices_[static_cast<std::size_t>(r)], block, Decoder(bounds_));
      } else {
        m = block_masses(slices_[static_cast<std::size_t>(r)], block);
      }
      std::copy(m.begin(), m.end(), mass.begin() + static_cast<std::ptrdiff_t>(r * per_rank));
    });
    // Pick blocks on the coordinator, then let the owning ranks scan.
    std::vector<std::pair<std::size_t, double>> picks;
    std::vector<Index> events = sample_blocks(mass, block, count, rng, [&](std::size_t b, double residual) {
      picks.emplace_back(b, residual);
      return Index{0};
    });
    pool_->run([&](int r) {
      const auto& s = slices_[static_cast<std::size_t>(r)];
      for (std::size_t e = 0; e < picks.size(); ++e) {
        const std::size_t b = picks[e].first;
        if (b / per_rank != static_cast<std::size_t>(r)) continue;
        const Index offset = (b % per_rank) * block;
        if constexpr (kEncoded) {
          events[e] += encoded::scan_block(std::span<const Elem>(s).subspan(offset, block),
                                           picks[e].second, Decoder(bounds_));
        } else {
          events[e] += scan_block(std::span<const Elem>(s).subspan(offset, block), picks[e].second);
        }
      }
    });
    return events;
  }

  void shorbox(const ShorParams& params) override {
    check_shorbox(layout_.n_qubits, params);
    if (!is_basis_zero()) throw ExecutionError("SHORBOX requires the state |0...0>");
    const double amp = std::pow(2.0, -0.5 * params.n_x);
    Elem value{};
    if constexpr (kEncoded) {
      set_bounds(Bounds{amp, amp});
      value = Encoder(bounds_)(Complex(amp));
    } else {
      value = amp;
    }
    pool_->run([&](int r) {
      auto& s = slices_[static_cast<std::size_t>(r)];
      if (r == 0) s[0] = Elem{};
      const Index lo = static_cast<Index>(r) * layout_.k_low;
      for_each_shor_state(params, [&](Index logical) {
        const Index phys = physical_index(logical);
        if (phys >= lo && phys < lo + layout_.k_low) s[phys - lo] = value;
      });
    });
  }

  void swap_global_local(int g, int l) override {
    if (g < layout_.n_low || g >= layout_.n_qubits || l < 0 || l >= layout_.n_low) {
      throw std::invalid_argument("swap_global_local: bad bit positions");
    }
    const int gb = g - layout_.n_low;
    const Index half = layout_.k_low / 2;
    pool_->run([&](int r) {
      auto& s = slices_[static_cast<std::size_t>(r)];
      const int partner = r ^ (1 << gb);
      const bool lower = !bits::test(static_cast<Index>(r), gb);
      const Index sel = lower ? bits::pow2(l) : 0;
      for (Index start = 0; start < half; start += buffer_elems_) {
        const Index cnt = std::min(buffer_elems_, half - start);
        Payload out(cnt * sizeof(Elem));
        auto* o = reinterpret_cast<Elem*>(out.data());
        for (Index t = 0; t < cnt; ++t) o[t] = s[bits::insert_zero(start + t, l) | sel];
        Payload in;
        if (lower) {
          transport_.send(r, partner, std::move(out));
          in = transport_.receive(r, partner);
        } else {
          in = transport_.receive(r, partner);
          transport_.send(r, partner, std::move(out));
        }
        const auto* p = reinterpret_cast<const Elem*>(in.data());
        for (Index t = 0; t < cnt; ++t) s[bits::insert_zero(start + t, l) | sel] = p[t];
      }
    });
    swap_positions(g, l);
    ++swaps_;
    if (swap_trace_.size() < kMaxTrace) {
      swap_trace_.push_back({{"instruction", instr_counter_}, {"global", g}, {"local", l}});
    }
  }

  void restore_identity() override {
    const int n = layout_.n_qubits;
    const int nl = layout_.n_low;
    for (int q = 0; q < n; ++q) {
      const int p = perm_[q];
      if (p == q) continue;
      // Positions below q already hold their own qubits, so p > q.
      if (p < nl) {
        swap_local(p, q);
      } else if (q < nl) {
        swap_global_local(p, q);
      } else {
        swap_global_local(p, nl - 1);
        swap_global_local(q, nl - 1);
        swap_global_local(p, nl - 1);
      }
    }
  }

  std::vector<Complex> gather() const override {
    std::vector<Complex> out(bits::pow2(layout_.n_qubits));
    for (Index r = 0; r < layout_.k_high; ++r) {
      const auto s = slice(static_cast<int>(r));
      for (Index i = 0; i < layout_.k_low; ++i) out[logical_index(r * layout_.k_low + i)] = s[i];
    }
    return out;
  }

  std::vector<Complex> slice(int rank) const override {
    const auto& s = slices_.at(static_cast<std::size_t>(rank));
    if constexpr (kEncoded) {
      const Decoder dec(bounds_);
      std::vector<Complex> out(s.size());
      for (Index i = 0; i < s.size(); ++i) out[i] = dec(s[i]);
      return out;
    } else {
      return s;
    }
  }

  nlohmann::json diagnostics() const override {
    nlohmann::json j;
    j["ranks"] = layout_.k_high;
    j["n_high"] = layout_.n_high;
    j["n_low"] = layout_.n_low;
    j["slice"] = kEncoded ? "encoded" : "exact";
    j["threads_per_rank"] = threads_per_rank_;
    j["buffer_bytes"] = buffer_bytes_;
    j["swaps"] = swaps_;
    j["cnot_toffoli_swaps"] = cnot_toffoli_swaps_;
    j["swap_trace"] = swap_trace_;
    j["instruction_bytes"] = instruction_bytes_;
    j["bytes_total"] = transport_.bytes_sent();
    j["messages"] = transport_.messages_sent();
    nlohmann::json per_rank = nlohmann::json::array();
    for (int r = 0; r < transport_.ranks(); ++r) per_rank.push_back(transport_.bytes_sent_by(r));
    j["rank_bytes"] = per_rank;
    j["rank_local_seconds"] = local_seconds_;
    j["rank_local_updates"] = local_updates_;
    j["final_permutation"] = perm_.values();
    if constexpr (kEncoded) {
      nlohmann::json hist = nlohmann::json::array();
      for (const auto& b : history_) hist.push_back({b.r0, b.r1});
      j["bounds_history"] = std::move(hist);
    }
    return j;
  }

 private:
  static constexpr std::size_t kMaxTrace = 100000;

  Index physical_index(Index logical) const {
    Index phys = 0;
    for (int q = 0; q < layout_.n_qubits; ++q) {
      if (bits::test(logical, q)) phys |= bits::pow2(perm_[q]);
    }
    return phys;
  }

  Index logical_index(Index phys) const {
    Index logical = 0;
    for (int q = 0; q < layout_.n_qubits; ++q) {
      if (bits::test(phys, perm_[q])) logical |= bits::pow2(q);
    }
    return logical;
  }

  int logical_at(int position) const {
    for (int q = 0; q < layout_.n_qubits; ++q) {
      if (perm_[q] == position) return q;
    }
    throw std::logic_error("permutation lost a position");
  }

  void swap_positions(int a, int b) { perm_.swap_logical(logical_at(a), logical_at(b)); }

  bool is_basis_zero() const {
    for (Index r = 0; r < layout_.k_high; ++r) {
      const auto& s = slices_[r];
      for (Index i = 0; i < s.size(); ++i) {
        const bool origin = r == 0 && i == 0;
        if constexpr (kEncoded) {
          if (origin ? !(s[i] == EncodedAmplitude{kCodeOne, 0}) : s[i].b0 != kCodeZero) return false;
        } else {
          if (s[i] != Complex(origin ? 1.0 : 0.0)) return false;
        }
      }
    }
    return true;
  }

  void swap_local(int a, int b) {
    pool_->run([&](int r) {
      auto& s = slices_[static_cast<std::size_t>(r)];
      if constexpr (kEncoded) {
        encoded::swap_bits(s, a, b);
      } else {
        kernels::omp::swap_bits(s, a, b);
      }
    });
    swap_positions(a, b);
  }

  // Moves every operand onto a local bit. A global operand trades places with
  // the highest local position the instruction does not use.
  std::vector<int> localize(const Instruction& instr) {
    std::vector<int> pos;
    for (int q : instr.qubits) pos.push_back(perm_[q]);
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (pos[k] < layout_.n_low) continue;
      int partner = layout_.n_low - 1;
      while (partner >= 0 && std::find(pos.begin(), pos.end(), partner) != pos.end()) --partner;
      if (partner < 0) {
        throw ExecutionError("distributed engine: not enough local qubits for " +
                             std::string(mnemonic(instr.opcode)));
      }
      swap_global_local(pos[k], partner);
      if (instr.opcode == Opcode::kCnot || instr.opcode == Opcode::kToffoli) ++cnot_toffoli_swaps_;
      pos[k] = partner;
    }
    return pos;
  }

  template <typename F>
  void timed(int r, F&& f) {
    const double t0 = thread_cpu_seconds();
    f();
    local_seconds_[static_cast<std::size_t>(r)] += thread_cpu_seconds() - t0;
    local_updates_[static_cast<std::size_t>(r)] += layout_.k_low;
  }

  void apply_local(const Instruction& instr, const std::vector<int>& pos) {
    if constexpr (kEncoded) {
      const GateMatrix u = gate_matrix(instr);
      if (auto mono = as_monomial(u)) {
        pool_->run([&](int r) {
          timed(r, [&] { encoded::apply_monomial(slices_[static_cast<std::size_t>(r)], *mono, pos); });
        });
        return;
      }
      if (u.dim != 2) {
        throw ExecutionError("encoded engine: unsupported dense multi-qubit gate " +
                             std::string(mnemonic(instr.opcode)));
      }
      transform_all(u, pos[0], [](int) { return true; });
    } else {
      pool_->run([&](int r) {
        timed(r, [&] { apply_gate_to(slices_[static_cast<std::size_t>(r)], instr, pos); });
      });
    }
  }

  // Two-pass encoded update with a global bound reduction in rank order.
  // Ranks for which keep(r) is false are cleared.
  template <typename Keep>
  void transform_all(const GateMatrix& u, int j, Keep&& keep) {
    if constexpr (kEncoded) {
      const Decoder in(bounds_);
      std::vector<MagnitudeRange> ranges(layout_.k_high);
      pool_->run([&](int r) {
        if (!keep(r)) return;
        timed(r, [&] {
          ranges[static_cast<std::size_t>(r)] =
              encoded::prescan_single(slices_[static_cast<std::size_t>(r)], j, u, in);
        });
      });
      MagnitudeRange all;
      for (const auto& m : ranges) all.merge(m);
      const Bounds next = choose_bounds(bounds_, all);
      const Encoder out(next);
      pool_->run([&](int r) {
        auto& s = slices_[static_cast<std::size_t>(r)];
        if (!keep(r)) {
          std::fill(s.begin(), s.end(), EncodedAmplitude{});
          return;
        }
        timed(r, [&] { encoded::transform_single(s, j, u, in, out); });
      });
      set_bounds(next);
    }
  }

  void set_bounds(const Bounds& b) {
    if constexpr (kEncoded) {
      if (b == bounds_) return;
      bounds_ = b;
      if (history_.size() < 4096) history_.push_back(b);
    }
  }

  double slice_norm(int r) const {
    const auto& s = slices_[static_cast<std::size_t>(r)];
    if constexpr (kEncoded) {
      return encoded::norm_squared(s, Decoder(bounds_));
    } else {
      return kernels::omp::norm_squared(s);
    }
  }

  kernels::PairMoments local_moments(int r, int p) const {
    const auto& s = slices_[static_cast<std::size_t>(r)];
    if constexpr (kEncoded) {
      return encoded::pair_moments(s, p, Decoder(bounds_));
    } else {
      return kernels::omp::pair_moments(s, p);
    }
  }

  // Pair moments of logical qubit q. For a global position the upper rank of
  // each pair streams its slice to the lower one (read only, not a swap).
  kernels::PairMoments moments(int q) {
    const int p = perm_[q];
    std::vector<kernels::PairMoments> part(layout_.k_high);
    if (p < layout_.n_low) {
      pool_->run([&](int r) { part[static_cast<std::size_t>(r)] = local_moments(r, p); });
    } else {
      const int gb = p - layout_.n_low;
      pool_->run([&](int r) {
        const auto& s = slices_[static_cast<std::size_t>(r)];
        const int partner = r ^ (1 << gb);
        if (bits::test(static_cast<Index>(r), gb)) {
          for (Index start = 0; start < layout_.k_low; start += buffer_elems_) {
            const Index cnt = std::min(buffer_elems_, layout_.k_low - start);
            Payload out(cnt * sizeof(Elem));
            std::memcpy(out.data(), s.data() + start, out.size());
            transport_.send(r, partner, std::move(out));
          }
          return;
        }
        kernels::PairMoments m;
        double re = 0.0;
        double im = 0.0;
        [[maybe_unused]] const Decoder dec(bounds_);
        for (Index start = 0; start < layout_.k_low; start += buffer_elems_) {
          const Payload in = transport_.receive(r, partner);
          const Index cnt = in.size() / sizeof(Elem);
          const auto* other = reinterpret_cast<const Elem*>(in.data());
          for (Index t = 0; t < cnt; ++t) {
            Complex a0;
            Complex a1;
            if constexpr (kEncoded) {
              a0 = dec(s[start + t]);
              a1 = dec(other[t]);
            } else {
              a0 = s[start + t];
              a1 = other[t];
            }
            m.p0 += std::norm(a0);
            m.p1 += std::norm(a1);
            re += a0.real() * a1.real() + a0.imag() * a1.imag();
            im += a0.real() * a1.imag() - a0.imag() * a1.real();
          }
        }
        m.overlap = Complex(re, im);
        part[static_cast<std::size_t>(r)] = m;
      });
    }
    kernels::PairMoments total;
    for (const auto& m : part) {
      total.p0 += m.p0;
      total.p1 += m.p1;
      total.overlap += m.overlap;
    }
    return total;
  }

  void record_bytes(const Instruction& instr, std::uint64_t bytes) {
    record_bytes_named(std::string(mnemonic(instr.opcode)), instr.line, bytes);
  }

  void record_bytes_named(const std::string& op, int line, std::uint64_t bytes) {
    if (instruction_bytes_.size() >= kMaxTrace) return;
    instruction_bytes_.push_back({{"instruction", instr_counter_}, {"op", op}, {"line", line}, {"bytes", bytes}});
  }

  RankLayout layout_;
  BitPermutation perm_;
  InProcessTransport transport_;
  std::vector<std::vector<Elem>> slices_;
  std::unique_ptr<RankPool> pool_;
  int threads_per_rank_ = 1;
  Index buffer_elems_ = 1;
  std::uint64_t buffer_bytes_ = 0;
  Bounds bounds_;
  std::vector<Bounds> history_;
  std::uint64_t swaps_ = 0;
  std::uint64_t cnot_toffoli_swaps_ = 0;
  std::uint64_t instr_counter_ = 0;
  nlohmann::json swap_trace_ = nlohmann::json::array();
  nlohmann::json instruction_bytes_ = nlohmann::json::array();
  std::vector<double> local_seconds_;
  std::vector<std::uint64_t> local_updates_;
};

}  // namespace

std::unique_ptr<DistributedBackend> make_distributed(int n_qubits, const DistOptions& options) {
  if (options.slice == SliceKind::kEncoded) {
    return std::make_unique<DistEngine<EncodedAmplitude>>(n_qubits, options);
  }
  return std::make_unique<DistEngine<Complex>>(n_qubits, options);
}

RunResult run_distributed(const Circuit& circuit, const DistOptions& dist, const RunOptions& options) {
  auto backend = make_distributed(circuit.n_qubits, dist);
  return run_circuit(circuit, *backend, options);
}

}  // namespace qcsim
