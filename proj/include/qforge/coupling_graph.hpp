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

#include <utility>
#include <vector>

namespace qforge {

/// Undirected connectivity over physical qudits 0..node_count-1.
class CouplingGraph {
 public:
  explicit CouplingGraph(int node_count);
  CouplingGraph(int node_count, const std::vector<std::pair<int, int>>& edges);

  static CouplingGraph line(int n);
  static CouplingGraph ring(int n);
  static CouplingGraph complete(int n);
  static CouplingGraph star(int n);  // hub 0
  static CouplingGraph grid(int rows, int cols);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  /// Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  std::vector<std::pair<int, int>> edges() const;

  bool connected() const;
  /// BFS hop distances from `source`; -1 for unreachable nodes.
  std::vector<int> distances_from(int source) const;

 private:
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace qforge
