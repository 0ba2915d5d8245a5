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

#include <complex>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/phase_gadget.hpp"
#include "qforge/simulator.hpp"
#include "qforge/state_prep.hpp"

namespace qforge {

/// M(v; phi) = I + (e^{i phi} - 1) |v><v|.
struct Reflection {
  std::vector<std::complex<double>> v;
  double phi = 0.0;
};

/// Throws std::invalid_argument unless ||v|| = 1 within 1e-12.
DenseUnitary reflection_matrix(const Reflection& r);

struct QhrFactorization {
  std::vector<Reflection> reflections;
  DiagonalSpec residual;
};

/// u = M(v_0) M(v_1) ... M(v_k) diag(e^{i beta}), one reflection per column
/// that is not already a phase times the matching basis vector. Throws
/// std::invalid_argument if u is not d^n square or not unitary within 1e-10.
QhrFactorization qhr_factor(const DenseUnitary& u, int d, int n);

/// S_v . diag(e^{i phi} on |0...0>) . S_v^dagger with S_v = synth_state(v).
/// Requires prime d.
Circuit reflection_to_circuit(const Reflection& r, int d, int n, int m = 0, const StatePrepOptions& options = {});

/// Residual diagonal first, then the reflections from last to first, so the
/// circuit's unitary is the factor product in operator order.
Circuit synth_unitary(const DenseUnitary& u, int d, int n, int m = 0, const StatePrepOptions& options = {});

}  // namespace qforge
