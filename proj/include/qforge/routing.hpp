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

#include <span>
#include <vector>

#include "qforge/circuit.hpp"
#include "qforge/coupling_graph.hpp"
#include "qforge/phase_gadget.hpp"

namespace qforge {

/// Vertex of minimum eccentricity, lowest index on ties. Throws
/// std::invalid_argument for a disconnected graph.
int center_of(const CouplingGraph& g);

/// Breadth-first spanning tree from `root`, neighbors visited in ascending order.
struct BfsTree {
  int root = 0;
  std::vector<int> order;   // visit order, order[0] == root
  std::vector<int> parent;  // parent[root] == -1
  std::vector<int> level;   // hop distance from root

  static BfsTree build(const CouplingGraph& g, int root);
  /// Tree path from a to b, both endpoints included.
  std::vector<int> path(int a, int b) const;
};

/// Nearest-neighbor SumPow sequence equal to SumPow(path.front() -> path.back(), k)
/// with every intermediate qudit restored. A path of two vertices returns the
/// gate itself; longer paths use 4L - 4 gates for L edges. Throws
/// std::invalid_argument when the path does not follow edges of `g` or its
/// endpoints differ from the gate's control and target.
std::vector<Gate> stair_expand(const SumPow& gate, std::span<const int> path, const CouplingGraph& g, int d);

/// synth_sequential in the frame where the center is the target of the
/// largest suffix class and the remaining qudits follow BFS order outward;
/// non-adjacent SumPow gates are stair-expanded along BFS tree paths.
Circuit synth_routed(const DiagonalSpec& spec, const CouplingGraph& g,
                     TransformMethod method = TransformMethod::automatic);

}  // namespace qforge
