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

// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "qforge/kernels.hpp"
#include "qforge/modular.hpp"
#include "qforge/phase_gadget.hpp"
#include "qforge/random.hpp"

using namespace qforge;

namespace {

std::vector<kernels::cplx> random_amps(std::size_t count, std::uint64_t seed) {
  CounterRng r(seed);
  std::vector<kernels::cplx> v(count);
  for (auto& a : v) a = {r.normal(), r.normal()};
  return v;
}

// A mix of the gate kinds the synthesizers emit.
std::vector<Gate> gate_mix(int n) {
  std::vector<Gate> gates;
  for (int q = 0; q + 1 < n; ++q) {
    gates.push_back(SumPow{q, q + 1, 1});
    gates.push_back(DiagSingle{q + 1, {0.0, 0.4, 1.1}});
    gates.push_back(TwoLevelH{q, 0, 2});
  }
  return gates;
}

template <auto Apply>
void apply_gate(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto amps = random_amps(checked_pow(3, n), 1);
  const auto gates = gate_mix(n);
  for (auto _ : st) {
    for (const Gate& g : gates) Apply(amps, 3, n, g);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * gates.size() * amps.size()));
}

template <auto Evolve>
void evolve_columns(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const std::size_t dim = checked_pow(3, n);
  const std::size_t columns = 16;
  auto data = random_amps(dim * columns, 2);
  const auto gates = gate_mix(n);
  for (auto _ : st) {
    Evolve(data, columns, 3, n, gates);
    benchmark::ClobberMemory();
  }
}

template <auto Transform>
void beta_to_alpha(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const DiagonalSpec spec = random_diagonal(3, n, 3);
  const std::vector<double> plus(spec.beta.begin() + 1, spec.beta.end());
  std::vector<double> alpha(plus.size());
  for (auto _ : st) {
    Transform(plus, 3, n, alpha);
    benchmark::DoNotOptimize(alpha.data());
  }
}

void beta_to_alpha_fast(benchmark::State& st) {
  const DiagonalSpec spec = random_diagonal(3, static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(transform_beta_to_alpha(spec, TransformMethod::fast));
}

}  // namespace

BENCHMARK(apply_gate<kernels::serial::apply_gate>)->Name("apply_gate/serial")->DenseRange(8, 12, 2);
BENCHMARK(apply_gate<kernels::omp::apply_gate>)->Name("apply_gate/omp")->DenseRange(8, 12, 2);
BENCHMARK(evolve_columns<kernels::serial::evolve_columns>)->Name("evolve_columns/serial")->DenseRange(5, 8, 3);
BENCHMARK(evolve_columns<kernels::omp::evolve_columns>)->Name("evolve_columns/omp")->DenseRange(5, 8, 3);
BENCHMARK(beta_to_alpha<kernels::serial::beta_to_alpha_naive>)->Name("beta_to_alpha_naive/serial")->DenseRange(4, 6, 1);
BENCHMARK(beta_to_alpha<kernels::omp::beta_to_alpha_naive>)->Name("beta_to_alpha_naive/omp")->DenseRange(4, 6, 1);
BENCHMARK(beta_to_alpha_fast)->Name("beta_to_alpha/fast")->DenseRange(4, 10, 2);
BENCHMARK_MAIN();
