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

#include "qforge/routing.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "qforge/diagonal_synth.hpp"
#include "qforge/modular.hpp"

namespace qforge {

int center_of(const CouplingGraph& g) {
  if (g.node_count() < 1) throw std::invalid_argument("center_of: empty graph");
  if (!g.connected()) throw std::invalid_argument("center_of: graph is disconnected");
  int best = 0;
  int best_ecc = g.node_count();
  for (int v = 0; v < g.node_count(); ++v) {
    const auto dist = g.distances_from(v);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc < best_ecc) {
      best = v;
      best_ecc = ecc;
    }
  }
  return best;
}

BfsTree BfsTree::build(const CouplingGraph& g, int root) {
  const int n = g.node_count();
  if (root < 0 || root >= n) throw std::invalid_argument("BfsTree: root out of range");
  BfsTree t;
  t.root = root;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  t.level.assign(static_cast<std::size_t>(n), -1);
  std::deque<int> frontier{root};
  t.level[static_cast<std::size_t>(root)] = 0;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop_front();
    t.order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (t.level[static_cast<std::size_t>(w)] >= 0) continue;
      t.level[static_cast<std::size_t>(w)] = t.level[static_cast<std::size_t>(v)] + 1;
      t.parent[static_cast<std::size_t>(w)] = v;
      frontier.push_back(w);
    }
  }
  if (static_cast<int>(t.order.size()) != n) throw std::invalid_argument("BfsTree: graph is disconnected");
  return t;
}

std::vector<int> BfsTree::path(int a, int b) const {
  std::vector<int> up{a};
  std::vector<int> down{b};
  while (up.back() != down.back()) {
    const int x = up.back();
    const int y = down.back();
    if (level[static_cast<std::size_t>(x)] >= level[static_cast<std::size_t>(y)]) {
      up.push_back(parent[static_cast<std::size_t>(x)]);
    } else {
      down.push_back(parent[static_cast<std::size_t>(y)]);
    }
  }
  down.pop_back();
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<Gate> stair_expand(const SumPow& gate, std::span<const int> path, const CouplingGraph& g, int d) {
  if (path.size() < 2) throw std::invalid_argument("stair_expand: path needs at least two vertices");
  if (path.front() != gate.control || path.back() != gate.target) {
    throw std::invalid_argument("stair_expand: path endpoints must be the gate's control and target");
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.has_edge(path[i - 1], path[i])) {
      throw std::invalid_argument("stair_expand: path not edge-contiguous at " + std::to_string(path[i - 1]) + "-" +
                                  std::to_string(path[i]));
    }
  }
  const std::size_t last = path.size() - 1;
  if (last == 1) return {gate};
  auto step = [&](std::size_t i, int k) { return Gate{SumPow{path[i - 1], path[i], mod(k, d)}}; };
  std::vector<Gate> out;
  out.reserve(4 * last - 4);
  // Raise the last relay by x_0, kick the target, undo; then cancel the
  // relay's own contribution to the target with a second pass that skips x_0.
  for (std::size_t i = 1; i < last; ++i) out.push_back(step(i, 1));
  out.push_back(step(last, gate.k));
  for (std::size_t i = last - 1; i >= 1; --i) out.push_back(step(i, -1));
  for (std::size_t i = 2; i < last; ++i) out.push_back(step(i, 1));
  out.push_back(step(last, -gate.k));
  for (std::size_t i = last - 1; i >= 2; --i) out.push_back(step(i, -1));
  return out;
}

Circuit synth_routed(const DiagonalSpec& spec, const CouplingGraph& g, TransformMethod method) {
  spec.check();
  require_prime(spec.d, "synth_routed");
  if (g.node_count() != spec.n) throw std::invalid_argument("synth_routed: graph must have one node per qudit");
  const int n = spec.n;
  const int d = spec.d;
  const BfsTree tree = BfsTree::build(g, center_of(g));

  // Logical qudit j lives on physical qudit phys[j]; the center is logical n-1.
  std::vector<int> phys(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) phys[static_cast<std::size_t>(j)] = tree.order[static_cast<std::size_t>(n - 1 - j)];

  DiagonalSpec logical{d, n, std::vector<double>(spec.beta.size())};
  std::vector<int> x(static_cast<std::size_t>(n));
  for (std::uint64_t y = 0; y < spec.beta.size(); ++y) {
    const auto ly = to_digits(y, d, n);
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(phys[static_cast<std::size_t>(j)])] = ly[static_cast<std::size_t>(j)];
    logical.beta[static_cast<std::size_t>(y)] = spec.beta[static_cast<std::size_t>(from_digits(x, d))];
  }

  const Circuit placed = synth_sequential(logical, method).remapped(QuditSystem{d, n, 0}, phys);
  Circuit out(QuditSystem{d, n, 0});
  for (const Gate& gate : placed.gates()) {
    const auto* s = std::get_if<SumPow>(&gate);
    if (s == nullptr || g.has_edge(s->control, s->target)) {
      out.append(gate);
      continue;
    }
    const auto path = tree.path(s->control, s->target);
    for (const Gate& e : stair_expand(*s, path, g, d)) out.append(e);
  }
  return out;
}

}  // namespace qforge
