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

#include "qforge/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qforge/modular.hpp"

namespace qforge {

std::uint64_t CounterRng::draw(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

DiagonalSpec random_diagonal(int d, int n, std::uint64_t seed, std::uint64_t cap) {
  if (d < 2 || n < 1) throw std::invalid_argument("random_diagonal: need d >= 2 and n >= 1");
  std::uint64_t dim = 0;
  try {
    dim = checked_pow(d, n);
  } catch (const std::overflow_error&) {
    throw CapExceeded("random_diagonal: d^n overflows");
  }
  if (dim > cap) throw CapExceeded("random_diagonal: d^n = " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
  CounterRng rng(seed);
  DiagonalSpec spec{d, n, std::vector<double>(static_cast<std::size_t>(dim), 0.0)};
  for (std::size_t i = 1; i < spec.beta.size(); ++i) spec.beta[i] = 2.0 * std::numbers::pi * rng.uniform();
  return spec;
}

StateSpec random_state(int d, int n, std::uint64_t seed) {
  CounterRng rng(seed);
  StateSpec s{d, n, std::vector<cplx>(static_cast<std::size_t>(checked_pow(d, n)))};
  double norm2 = 0.0;
  for (auto& a : s.amplitudes) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = {re, im};
    norm2 += re * re + im * im;
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : s.amplitudes) a *= scale;
  return s;
}

DenseUnitary haar_unitary(std::size_t dim, std::uint64_t seed) {
  CounterRng rng(seed);
  const auto k = static_cast<Eigen::Index>(dim);
  DenseUnitary z(k, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    for (Eigen::Index r = 0; r < k; ++r) {
      const double re = rng.normal();
      z(r, c) = cplx{re, rng.normal()} / std::numbers::sqrt2;
    }
  }
  Eigen::HouseholderQR<DenseUnitary> qr(z);
  DenseUnitary q = qr.householderQ();
  const DenseUnitary r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < k; ++c) {
    const cplx diag = r(c, c);
    if (std::abs(diag) > 0.0) q.col(c) *= diag / std::abs(diag);
  }
  return q;
}

}  // namespace qforge
