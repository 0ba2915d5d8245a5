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

// Dense inner loops, each in two flavours: `serial` is the straightforward
// reference kept for testing, `omp` is the OpenMP-parallel version the
// library calls. Both produce bit-identical results on the same inputs,
// except for floating-point reduction order where noted.

#include <complex>
#include <cstddef>
#include <span>

#include "qforge/circuit.hpp"

namespace qforge::kernels {

using cplx = std::complex<double>;

/// Largest level count the amplitude kernels accept.
inline constexpr int kMaxLevels = 64;

namespace serial {

/// In-place update of a d^n amplitude vector by one gate (qudit 0 is the
/// most significant digit of the index).
void apply_gate(std::span<cplx> amps, int d, int n, const Gate& g);

/// Runs every gate of `gates` over `columns` independent vectors laid out
/// contiguously (column c occupies [c*dim, (c+1)*dim)).
void evolve_columns(std::span<cplx> data, std::size_t columns, int d, int n, std::span<const Gate> gates);

/// alpha = B * beta_plus with B_ij = (delta_1(<s_i,s_j>) - delta_0(<s_i,s_j>)) / d^(n-1),
/// s_i the base-d digits of i+1. Both spans have length d^n - 1.
void beta_to_alpha_naive(std::span<const double> beta_plus, int d, int n, std::span<double> alpha);

/// beta_plus = A * alpha with A_ij = delta_1(<s_i,s_j>).
void alpha_to_beta_naive(std::span<const double> alpha, int d, int n, std::span<double> beta_plus);

}  // namespace serial

namespace omp {

void apply_gate(std::span<cplx> amps, int d, int n, const Gate& g);
void evolve_columns(std::span<cplx> data, std::size_t columns, int d, int n, std::span<const Gate> gates);
void beta_to_alpha_naive(std::span<const double> beta_plus, int d, int n, std::span<double> alpha);
void alpha_to_beta_naive(std::span<const double> alpha, int d, int n, std::span<double> beta_plus);

}  // namespace omp

}  // namespace qforge::kernels
