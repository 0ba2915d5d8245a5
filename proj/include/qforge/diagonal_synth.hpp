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

#include <cstddef>
#include <span>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/phase_gadget.hpp"

namespace qforge {

/// Phases of the single-qudit diagonal that realizes every gadget along the
/// direction s (last nonzero digit equal to 1) once the target qudit holds
/// <s, x> mod d: level y != 0 picks up alpha at string y^-1 * s.
std::vector<double> direction_phases(const AlphaVector& alpha, std::span<const int> s);

/// Gray-code phase-gadget circuit on alpha.n qudits, no ancillas. For each
/// suffix class (last nonzero digit at qudit p, p = 0..n-1) qudit p is the
/// target and the d-ary Gray code walks the p leading digits, one SumPow and
/// one DiagSingle per codeword, plus one SumPow closing the cycle.
Circuit synth_from_alpha(const AlphaVector& alpha, double global_phase = 0.0);

/// Exact synthesis of diag(e^{i beta}): transform to gadget angles, then
/// synth_from_alpha with GlobalPhase(beta_0). Requires prime d.
Circuit synth_sequential(const DiagonalSpec& spec, TransformMethod method = TransformMethod::automatic);

/// Synthesizes an arbitrary gadget product (any order, any t).
Circuit synth_gadgets(std::span<const PhaseGadget> gadgets, int d, int n);

/// Resource split chosen for an ancilla budget. Copies of the main register
/// feed controls; target ancillas each walk a share of the gadget directions.
struct ParallelPlan {
  int copies = 1;        // register copies including the main register
  int targets = 0;       // 0 means the sequential construction is used
  int split_digits = 0;  // leading digits fixed per chunk of a Gray walk
  int ancillas = 0;      // (copies - 1) * n + targets
  std::size_t depth = 0;
};

/// Lowest-depth plan for (d, n, m). Candidate sets are nested in m, so the
/// resulting depth never increases as m grows. Results are memoized.
ParallelPlan plan_parallel(int d, int n, int m);

/// Circuit over n + m qudits: ancillas start and end in |0>, and the main
/// register sees diag(e^{i beta}). m = 0 is exactly synth_sequential.
Circuit synth_parallel(const DiagonalSpec& spec, int m, TransformMethod method = TransformMethod::automatic);

/// Same circuit shape for a fixed plan (used by benchmarks and tests).
Circuit synth_parallel_with_plan(const DiagonalSpec& spec, int m, const ParallelPlan& plan,
                                 TransformMethod method = TransformMethod::automatic);

}  // namespace qforge
