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

#include "qcsim/encoding.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace qcsim {

namespace {

// e^{i pi b1 / 128}, reduced to the first quadrant so that quarter turns
// come out exact.
Complex unit_phase(int b1) {
  const int k = (b1 % 256 + 256) % 256;
  const int rem = k % 64;
  Complex z{1.0, 0.0};
  if (rem != 0) {
    const double t = std::numbers::pi * rem / 128.0;
    z = {std::cos(t), std::sin(t)};
  }
  switch (k / 64) {
    case 1: return {-z.imag(), z.real()};
    case 2: return -z;
    case 3: return {z.imag(), -z.real()};
    default: return z;
  }
}

std::array<double, 256> trig_table(bool sine) {
  std::array<double, 256> t{};
  for (int b1 = -128; b1 < 128; ++b1) {
    const Complex z = unit_phase(b1);
    t[static_cast<std::size_t>(b1 + 128)] = sine ? z.imag() : z.real();
  }
  return t;
}

double decode_magnitude(std::int8_t b0, const Bounds& bounds) {
  if (b0 == kCodeZero) return 0.0;
  if (b0 == kCodeOne) return 1.0;
  if (bounds.degenerate()) return bounds.r0;
  return (b0 + 127) * (bounds.r1 - bounds.r0) / 253.0 + bounds.r0;
}

}  // namespace

const std::array<double, 256> Decoder::cos_ = trig_table(false);
const std::array<double, 256> Decoder::sin_ = trig_table(true);

std::int8_t phase_code(double theta) {
  long b1 = round_away(128.0 * theta / std::numbers::pi);
  b1 = ((b1 + 128) % 256 + 256) % 256 - 128;
  return static_cast<std::int8_t>(b1);
}

std::int8_t magnitude_code(double r, const Bounds& bounds) {
  if (bounds.degenerate()) return 0;
  const long b0 = round_away((r - bounds.r0) * 253.0 / (bounds.r1 - bounds.r0)) - 127;
  return static_cast<std::int8_t>(std::clamp<long>(b0, -127, 126));
}

EncodedAmplitude encode(Complex z, const Bounds& bounds) {
  const double r = std::abs(z);
  if (r > 1.0 + kMagnitudeSlack) {
    throw ExecutionError("encode: amplitude magnitude " + std::to_string(r) + " exceeds 1");
  }
  return Encoder(bounds)(z);
}

Complex decode(EncodedAmplitude code, const Bounds& bounds) {
  const double r = decode_magnitude(code.b0, bounds);
  return r * unit_phase(code.b1);
}

Decoder::Decoder(const Bounds& bounds) : bounds_(bounds) {
  for (int b0 = -128; b0 < 128; ++b0) {
    radius_[static_cast<std::size_t>(b0 + 128)] = decode_magnitude(static_cast<std::int8_t>(b0), bounds);
  }
}

EncodedAmplitude Encoder::operator()(Complex z) const {
  const double r = std::sqrt(std::norm(z));
  if (r < kEpsZero) return {kCodeZero, 0};
  const std::int8_t b1 = phase_code(std::atan2(z.imag(), z.real()));
  if (std::abs(r - 1.0) < kEpsOne || r > 1.0) return {kCodeOne, b1};
  return {magnitude_code(r, bounds_), b1};
}

}  // namespace qcsim
