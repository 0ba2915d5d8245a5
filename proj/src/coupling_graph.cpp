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

#include "qforge/coupling_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace qforge {

CouplingGraph::CouplingGraph(int node_count) {
  if (node_count < 1) throw std::invalid_argument("CouplingGraph: need at least one node");
  adjacency_.resize(static_cast<std::size_t>(node_count));
}

CouplingGraph::CouplingGraph(int node_count, const std::vector<std::pair<int, int>>& edges)
    : CouplingGraph(node_count) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

CouplingGraph CouplingGraph::line(int n) {
  CouplingGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

CouplingGraph CouplingGraph::ring(int n) {
  CouplingGraph g = line(n);
  if (n > 2) g.add_edge(n - 1, 0);
  return g;
}

CouplingGraph CouplingGraph::complete(int n) {
  CouplingGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

CouplingGraph CouplingGraph::star(int n) {
  CouplingGraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

CouplingGraph CouplingGraph::grid(int rows, int cols) {
  CouplingGraph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

void CouplingGraph::add_edge(int a, int b) {
  const int n = node_count();
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw std::invalid_argument("CouplingGraph: edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") out of range");
  }
  if (a == b) throw std::invalid_argument("CouplingGraph: self-loop on " + std::to_string(a));
  if (has_edge(a, b)) return;
  auto insert_sorted = [](std::vector<int>& v, int x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); };
  insert_sorted(adjacency_[static_cast<std::size_t>(a)], b);
  insert_sorted(adjacency_[static_cast<std::size_t>(b)], a);
}

bool CouplingGraph::has_edge(int a, int b) const {
  const int n = node_count();
  if (a < 0 || b < 0 || a >= n || b >= n) return false;
  const auto& adj = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<std::pair<int, int>> CouplingGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < node_count(); ++a) {
    for (int b : adjacency_[static_cast<std::size_t>(a)]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> CouplingGraph::distances_from(int source) const {
  std::vector<int> dist(adjacency_.size(), -1);
  std::queue<int> frontier;
  dist.at(static_cast<std::size_t>(source)) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adjacency_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

bool CouplingGraph::connected() const {
  const auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

}  // namespace qforge
