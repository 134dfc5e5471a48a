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

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <vector>

namespace qcsim {

using Payload = std::vector<std::byte>;

/// Reliable, ordered point-to-point messages between ranks.
class Transport {
 public:
  virtual ~Transport() = default;

  virtual int ranks() const = 0;
  /// Non-blocking: the payload is queued for `to`.
  virtual void send(int from, int to, Payload payload) = 0;
  /// Blocks until the next message from `from` to `at` arrives.
  virtual Payload receive(int at, int from) = 0;

  virtual std::uint64_t bytes_sent() const = 0;
  virtual std::uint64_t bytes_sent_by(int rank) const = 0;
  virtual std::uint64_t messages_sent() const = 0;
};

/// Ranks living in one process: one FIFO channel per ordered rank pair.
class InProcessTransport final : public Transport {
 public:
  explicit InProcessTransport(int ranks);

  int ranks() const override { return ranks_; }
  void send(int from, int to, Payload payload) override;
  Payload receive(int at, int from) override;

  std::uint64_t bytes_sent() const override;
  std::uint64_t bytes_sent_by(int rank) const override;
  std::uint64_t messages_sent() const override;

 private:
  struct Channel {
    std::mutex mutex;
    std::condition_variable ready;
    std::deque<Payload> queue;
  };
  struct Counter {
    std::mutex mutex;
    std::uint64_t bytes = 0;
    std::uint64_t messages = 0;
  };

  Channel& channel(int from, int to) {
    return *channels_[static_cast<std::size_t>(from * ranks_ + to)];
  }

  int ranks_;
  std::vector<std::unique_ptr<Channel>> channels_;
  std::vector<std::unique_ptr<Counter>> counters_;
};

}  // namespace qcsim
