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

#include "qcsim/transport.hpp"

#include <stdexcept>
#include <string>

namespace qcsim {

InProcessTransport::InProcessTransport(int ranks) : ranks_(ranks) {
  if (ranks < 1) throw std::invalid_argument("transport: at least one rank required");
  for (int i = 0; i < ranks * ranks; ++i) channels_.push_back(std::make_unique<Channel>());
  for (int i = 0; i < ranks; ++i) counters_.push_back(std::make_unique<Counter>());
}

void InProcessTransport::send(int from, int to, Payload payload) {
  if (from < 0 || from >= ranks_ || to < 0 || to >= ranks_ || from == to) {
    throw std::invalid_argument("transport: bad route " + std::to_string(from) + " -> " +
                                std::to_string(to));
  }
  {
    Counter& c = *counters_[static_cast<std::size_t>(from)];
    std::lock_guard lock(c.mutex);
    c.bytes += payload.size();
    ++c.messages;
  }
  Channel& ch = channel(from, to);
  {
    std::lock_guard lock(ch.mutex);
    ch.queue.push_back(std::move(payload));
  }
  ch.ready.notify_one();
}

Payload InProcessTransport::receive(int at, int from) {
  Channel& ch = channel(from, at);
  std::unique_lock lock(ch.mutex);
  ch.ready.wait(lock, [&] { return !ch.queue.empty(); });
  Payload p = std::move(ch.queue.front());
  ch.queue.pop_front();
  return p;
}

std::uint64_t InProcessTransport::bytes_sent() const {
  std::uint64_t total = 0;
  for (int r = 0; r < ranks_; ++r) total += bytes_sent_by(r);
  return total;
}

std::uint64_t InProcessTransport::bytes_sent_by(int rank) const {
  Counter& c = *counters_[static_cast<std::size_t>(rank)];
  std::lock_guard lock(c.mutex);
  return c.bytes;
}

std::uint64_t InProcessTransport::messages_sent() const {
  std::uint64_t total = 0;
  for (const auto& c : counters_) {
    std::lock_guard lock(c->mutex);
    total += c->messages;
  }
  return total;
}

}  // namespace qcsim
