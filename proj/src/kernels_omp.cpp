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

#include <omp.h>

#include <cstdint>

#include "kernel_detail.hpp"

namespace qforge::kernels::omp {

namespace {

// Below this many iterations the fork/join costs more than the loop.
constexpr std::size_t kParallelThreshold = 1 << 12;

struct OmpLoop {
  template <class F>
  void operator()(std::size_t count, F&& body) const {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) if (count >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  }
};

// Transform rows cost O(d^n) each, so a handful already pays for threads.
struct OmpRowLoop {
  template <class F>
  void operator()(std::size_t count, F&& body) const {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16) if (count >= 64)
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  }
};

}  // namespace

void apply_gate(std::span<cplx> amps, int d, int n, const Gate& g) { detail::apply_gate(amps, d, n, g, OmpLoop{}); }

void evolve_columns(std::span<cplx> data, std::size_t columns, int d, int n, std::span<const Gate> gates) {
  const std::size_t dim = detail::ipow(d, n);
  if (data.size() != dim * columns) throw std::invalid_argument("evolve_columns: data size mismatch");
  const auto count = static_cast<std::int64_t>(columns);
#pragma omp parallel for schedule(dynamic, 1) if (columns > 1)
  for (std::int64_t c = 0; c < count; ++c) {
    auto column = data.subspan(static_cast<std::size_t>(c) * dim, dim);
    for (const Gate& g : gates) serial::apply_gate(column, d, n, g);
  }
}

void beta_to_alpha_naive(std::span<const double> beta_plus, int d, int n, std::span<double> alpha) {
  detail::beta_to_alpha(beta_plus, d, n, alpha, OmpRowLoop{});
}

void alpha_to_beta_naive(std::span<const double> alpha, int d, int n, std::span<double> beta_plus) {
  detail::alpha_to_beta(alpha, d, n, beta_plus, OmpRowLoop{});
}

}  // namespace qforge::kernels::omp
