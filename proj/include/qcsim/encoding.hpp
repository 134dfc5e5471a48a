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
#include <cmath>
#include <cstdint>

#include "qcsim/types.hpp"

namespace qcsim {

/// Polar 2-byte amplitude. b0 is the magnitude code (-128: r = 0, 127: r = 1,
/// otherwise linear between the bounds r0 and r1); b1 is the phase,
/// theta = pi b1 / 128.
struct EncodedAmplitude {
  std::int8_t b0 = -128;
  std::int8_t b1 = 0;

  friend bool operator==(const EncodedAmplitude&, const EncodedAmplitude&) = default;
};
static_assert(sizeof(EncodedAmplitude) == 2);

inline constexpr std::int8_t kCodeZero = -128;
inline constexpr std::int8_t kCodeOne = 127;
inline constexpr double kEpsZero = 1e-12;
inline constexpr double kEpsOne = 1e-12;
/// Magnitudes this far above 1 are rejected by encode().
inline constexpr double kMagnitudeSlack = 1e-9;

/// Magnitude bounds of the linear code range. r0 == r1 is the degenerate
/// case (a single intermediate magnitude, or none: the (0.5, 0.5) sentinel).
struct Bounds {
  double r0 = 0.5;
  double r1 = 0.5;

  bool degenerate() const { return r0 == r1; }
  /// Magnitude difference between adjacent codes.
  double step() const { return (r1 - r0) / 253.0; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// True for magnitudes that are stored in the linear code range.
inline bool is_intermediate(double r) { return r >= kEpsZero && std::abs(r - 1.0) >= kEpsOne; }

/// Rounds half away from zero.
inline long round_away(double x) { return std::lround(x); }

/// Phase code of an angle, wrapped into [-128, 128).
std::int8_t phase_code(double theta);

/// Magnitude code for an intermediate magnitude r under `bounds`.
std::int8_t magnitude_code(double r, const Bounds& bounds);

/// Throws ExecutionError when |z| > 1 + kMagnitudeSlack.
EncodedAmplitude encode(Complex z, const Bounds& bounds);

Complex decode(EncodedAmplitude code, const Bounds& bounds);

/// Adds a phase code offset to a code, wrapping; zero stays canonical.
inline EncodedAmplitude shift_phase(EncodedAmplitude c, std::int8_t offset) {
  if (c.b0 == kCodeZero) return c;
  c.b1 = static_cast<std::int8_t>(static_cast<std::uint8_t>(c.b1) + static_cast<std::uint8_t>(offset));
  return c;
}

/// Table-driven decoder for fixed bounds.
class Decoder {
 public:
  explicit Decoder(const Bounds& bounds);

  const Bounds& bounds() const { return bounds_; }
  double magnitude(EncodedAmplitude c) const { return radius_[static_cast<std::uint8_t>(c.b0 + 128)]; }
  Complex operator()(EncodedAmplitude c) const {
    const double r = magnitude(c);
    const auto k = static_cast<std::uint8_t>(c.b1 + 128);
    return {r * cos_[k], r * sin_[k]};
  }

 private:
  Bounds bounds_;
  std::array<double, 256> radius_{};
  static const std::array<double, 256> cos_;
  static const std::array<double, 256> sin_;
};

/// Table-driven encoder for fixed bounds; equal to encode() on valid input
/// but saturates magnitudes above 1 instead of throwing.
class Encoder {
 public:
  explicit Encoder(const Bounds& bounds) : bounds_(bounds) {}

  const Bounds& bounds() const { return bounds_; }
  EncodedAmplitude operator()(Complex z) const;

 private:
  Bounds bounds_;
};

}  // namespace qcsim
