// Copyright 2026 The qforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "qforge/phase_gadget.hpp"
#include "qforge/simulator.hpp"
#include "qforge/state_prep.hpp"

namespace qforge {

/// Counter-based SplitMix64: draw i (0-based) of stream `seed` is
/// mix(seed + (i + 1) * 0x9E3779B97F4A7C15), with the standard SplitMix64
/// finalizer as mix. uniform() maps a draw x to (x >> 11) * 2^-53.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t draw(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next() { return draw(seed_, counter_++); }
  /// In [0, 1).
  double uniform();
  /// Standard normal via Box-Muller, consuming two draws.
  double normal();
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

inline constexpr std::uint64_t kDefaultSpecCap = std::uint64_t{1} << 22;

/// beta_0 = 0 and beta_1..beta_{d^n-1} = 2 pi * uniform(), in index order.
/// Throws CapExceeded when d^n is above `cap`.
DiagonalSpec random_diagonal(int d, int n, std::uint64_t seed, std::uint64_t cap = kDefaultSpecCap);

/// Normalized complex Gaussian vector (uniform on the sphere).
StateSpec random_state(int d, int n, std::uint64_t seed);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
DenseUnitary haar_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace qforge
