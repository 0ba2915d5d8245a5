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

#include "kernel_detail.hpp"

namespace qforge::kernels::serial {

namespace {

struct SerialLoop {
  template <class F>
  void operator()(std::size_t count, F&& body) const {
    for (std::size_t i = 0; i < count; ++i) body(i);
  }
};

}  // namespace

void apply_gate(std::span<cplx> amps, int d, int n, const Gate& g) { detail::apply_gate(amps, d, n, g, SerialLoop{}); }

void evolve_columns(std::span<cplx> data, std::size_t columns, int d, int n, std::span<const Gate> gates) {
  const std::size_t dim = detail::ipow(d, n);
  if (data.size() != dim * columns) throw std::invalid_argument("evolve_columns: data size mismatch");
  for (std::size_t c = 0; c < columns; ++c) {
    auto column = data.subspan(c * dim, dim);
    for (const Gate& g : gates) apply_gate(column, d, n, g);
  }
}

void beta_to_alpha_naive(std::span<const double> beta_plus, int d, int n, std::span<double> alpha) {
  detail::beta_to_alpha(beta_plus, d, n, alpha, SerialLoop{});
}

void alpha_to_beta_naive(std::span<const double> alpha, int d, int n, std::span<double> beta_plus) {
  detail::alpha_to_beta(alpha, d, n, beta_plus, SerialLoop{});
}

}  // namespace qforge::kernels::serial
