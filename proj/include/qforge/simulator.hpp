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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qforge/circuit.hpp"

namespace qforge {

using cplx = std::complex<double>;
using DenseUnitary = Eigen::MatrixXcd;

inline constexpr std::uint64_t kDefaultDimCap = 2187;
inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 24;

/// Thrown when a dense object would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimulatorOptions {
  /// Largest matrix dimension unitary_of / main_register_action will build.
  std::uint64_t dim_cap = kDefaultDimCap;
  /// Largest full-register amplitude vector (main + ancilla) ever allocated.
  std::uint64_t state_cap = kDefaultStateCap;
  bool parallel = true;
  /// Let main_register_action follow basis states through circuits with no
  /// TwoLevelH gate instead of evolving dense columns.
  bool basis_tracking = true;
};

/// Defaults, with dim_cap taken from QFORGE_DIM_CAP when that is set.
SimulatorOptions options_from_env();

class StateVector {
 public:
  /// |0...0> on n qudits of d levels.
  StateVector(int d, int n);
  StateVector(int d, int n, std::vector<cplx> amplitudes);
  static StateVector basis(int d, int n, std::uint64_t index);

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

 private:
  int d_;
  int n_;
  std::vector<cplx> amps_;
};

/// Strided in-place update; throws std::invalid_argument when a gate index
/// is outside the state's register.
void apply_gate(StateVector& s, const Gate& g, bool parallel = true);
/// Runs the circuit on `s`, whose register must cover all of c's qudits.
StateVector run(const Circuit& c, StateVector s, bool parallel = true);

/// Product of all gate matrices in circuit order, including global phases.
/// Throws CapExceeded when d^total exceeds options.dim_cap.
DenseUnitary unitary_of(const Circuit& c, const SimulatorOptions& options = {});

/// Column x is the circuit applied to |x>|0^m>, projected back onto the
/// ancilla-zero subspace. Equals unitary_of when there are no ancillas; a
/// circuit that fails to restore its ancillas yields a non-unitary result.
DenseUnitary main_register_action(const Circuit& c, const SimulatorOptions& options = {});

/// True when every gate maps basis states to phased basis states.
bool is_monomial(const Circuit& c);

/// max |u - c v| with the unit scalar c fixed by v's largest-magnitude entry.
double max_deviation_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v);
double max_deviation_up_to_global_phase(std::span<const cplx> u, std::span<const cplx> v);
bool equal_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v, double tol);

/// Local matrix of a gate: d x d for single-qudit gates, d^2 x d^2 for SumPow
/// (control is the leading digit), 1 x 1 for GlobalPhase.
Eigen::MatrixXcd gate_matrix(const Gate& g, int d);

/// Image of a computational basis state under a circuit made only of
/// permutation-with-phase gates (everything except TwoLevelH). Lets ancilla
/// restoration be checked on registers far too large for dense simulation.
struct BasisImage {
  std::vector<int> digits;
  double phase = 0.0;
};
BasisImage track_basis(const Circuit& c, std::vector<int> digits);

}  // namespace qforge
