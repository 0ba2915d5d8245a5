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
#include <cstdint>
#include <span>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/coupling_graph.hpp"
#include "qforge/phase_gadget.hpp"

namespace qforge {

struct StateSpec {
  int d = 2;
  int n = 1;
  std::vector<std::complex<double>> amplitudes;

  /// Throws std::invalid_argument unless there are d^n finite amplitudes
  /// with unit norm (within `tol`).
  void check(double tol = 1e-10) const;
};

/// d-ary magnitude tree: level n holds |psi_k|, every internal node the
/// root-sum-square of its children, level 0 the single root.
class AmplitudeTree {
 public:
  static AmplitudeTree build(const StateSpec& s);

  int d() const { return d_; }
  int n() const { return n_; }
  /// Node values at `level` (d^level of them), ordered by d-ary prefix.
  std::span<const double> level(int level) const;
  double value(int level, std::uint64_t node) const { return this->level(level)[node]; }

 private:
  int d_ = 2;
  int n_ = 0;
  std::vector<std::vector<double>> levels_;
};

inline AmplitudeTree build_tree(const StateSpec& s) { return AmplitudeTree::build(s); }

/// How the d children of a node are split into binary rotation steps.
enum class SplitOrder {
  /// Highest split first: step j pairs level k with k + h, h = 2^(J-1-j),
  /// moving the mass of children [k+h, k+2h) out of the block [k, k+2h).
  interval,
  /// Lowest split first: step j pairs k with k + 2^j (k < 2^j) and splits the
  /// children congruent to k from those congruent to k + 2^j mod 2^(j+1).
  residue,
};

/// ceil(log2 d): rotation steps per layer.
int split_steps(int d);

/// One two-level rotation of a step: the occupied level `low`, the empty
/// level `high`, and the child positions that end up on each side.
struct SplitPair {
  int low = 0;
  int high = 1;
  std::vector<int> stay;
  std::vector<int> move;
};

/// Pairs of step j, only those with both levels below d.
std::vector<SplitPair> split_pairs(int d, int step, SplitOrder order);

/// theta = arccos(sqrt(s / (s + t))) for every level-`layer` node w and pair
/// of step j, flattened as [w * pairs + r]; s + t = 0 gives 0.
std::vector<double> layer_thetas(const AmplitudeTree& tree, int layer, int step,
                                 SplitOrder order = SplitOrder::interval);

/// Which diagonal synthesizer compiles the controlled stages.
struct DiagonalBackend {
  enum class Kind { sequential, parallel, routed };
  Kind kind = Kind::sequential;
  /// Used by the routed backend; one node per main qudit.
  const CouplingGraph* graph = nullptr;
};

struct StatePrepOptions {
  SplitOrder order = SplitOrder::interval;
  DiagonalBackend backend;
  TransformMethod transform = TransformMethod::automatic;
};

/// Circuit over n + m qudits taking |0...0>|0^m> to |psi>|0^m> up to global
/// phase. The parallel backend lends the m ancillas to every diagonal stage;
/// other backends leave them idle. Requires prime d.
Circuit synth_state(const StateSpec& s, int m = 0, const StatePrepOptions& options = {});

/// Diagonal on the leading spec.n qudits compiled by the chosen backend and
/// embedded into an n + m register.
Circuit synth_diagonal_with(const DiagonalSpec& spec, int n, int m, const StatePrepOptions& options);

}  // namespace qforge
