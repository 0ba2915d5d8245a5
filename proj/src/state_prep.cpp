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

#include "qforge/state_prep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qforge/diagonal_synth.hpp"
#include "qforge/modular.hpp"
#include "qforge/routing.hpp"

namespace qforge {

namespace {

std::vector<int> identity_map(int k) {
  std::vector<int> map(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) map[static_cast<std::size_t>(i)] = i;
  return map;
}

CouplingGraph induced_prefix(const CouplingGraph& g, int k) {
  CouplingGraph sub(k);
  for (auto [a, b] : g.edges()) {
    if (a < k && b < k) sub.add_edge(a, b);
  }
  return sub;
}

double mass(std::span<const double> children, const std::vector<int>& positions) {
  double acc = 0.0;
  for (int c : positions) acc += children[static_cast<std::size_t>(c)] * children[static_cast<std::size_t>(c)];
  return acc;
}

}  // namespace

void StateSpec::check(double tol) const {
  if (d < 2) throw std::invalid_argument("StateSpec: d must be >= 2");
  if (n < 1) throw std::invalid_argument("StateSpec: n must be >= 1");
  if (amplitudes.size() != checked_pow(d, n)) {
    throw std::invalid_argument("StateSpec: expected d^n = " + std::to_string(checked_pow(d, n)) + " amplitudes, got " +
                                std::to_string(amplitudes.size()));
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw std::invalid_argument("StateSpec: non-finite amplitude");
    norm2 += std::norm(a);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > tol) {
    throw std::invalid_argument("StateSpec: state is not normalized (norm " + std::to_string(std::sqrt(norm2)) + ")");
  }
}

AmplitudeTree AmplitudeTree::build(const StateSpec& s) {
  s.check();
  AmplitudeTree t;
  t.d_ = s.d;
  t.n_ = s.n;
  t.levels_.resize(static_cast<std::size_t>(s.n) + 1);
  auto& leaves = t.levels_.back();
  leaves.reserve(s.amplitudes.size());
  for (const auto& a : s.amplitudes) leaves.push_back(std::abs(a));
  const auto ud = static_cast<std::size_t>(s.d);
  for (int l = s.n - 1; l >= 0; --l) {
    const auto& below = t.levels_[static_cast<std::size_t>(l) + 1];
    auto& here = t.levels_[static_cast<std::size_t>(l)];
    here.assign(below.size() / ud, 0.0);
    for (std::size_t w = 0; w < here.size(); ++w) {
      double acc = 0.0;
      for (std::size_t c = 0; c < ud; ++c) acc += below[w * ud + c] * below[w * ud + c];
      here[w] = std::sqrt(acc);
    }
  }
  return t;
}

std::span<const double> AmplitudeTree::level(int level) const {
  if (level < 0 || level > n_) throw std::out_of_range("AmplitudeTree::level: level out of range");
  return levels_[static_cast<std::size_t>(level)];
}

int split_steps(int d) {
  int j = 0;
  while ((1 << j) < d) ++j;
  return j;
}

std::vector<SplitPair> split_pairs(int d, int step, SplitOrder order) {
  const int steps = split_steps(d);
  if (step < 0 || step >= steps) throw std::out_of_range("split_pairs: step out of range");
  std::vector<SplitPair> pairs;
  if (order == SplitOrder::interval) {
    const int h = 1 << (steps - 1 - step);
    for (int k = 0; k + h < d; k += 2 * h) {
      SplitPair p{k, k + h, {}, {}};
      for (int c = k; c < k + h; ++c) p.stay.push_back(c);
      for (int c = k + h; c < std::min(k + 2 * h, d); ++c) p.move.push_back(c);
      pairs.push_back(std::move(p));
    }
  } else {
    const int h = 1 << step;
    for (int k = 0; k < h && k + h < d; ++k) {
      SplitPair p{k, k + h, {}, {}};
      for (int c = k; c < d; c += 2 * h) p.stay.push_back(c);
      for (int c = k + h; c < d; c += 2 * h) p.move.push_back(c);
      pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

std::vector<double> layer_thetas(const AmplitudeTree& tree, int layer, int step, SplitOrder order) {
  if (layer < 0 || layer >= tree.n()) throw std::out_of_range("layer_thetas: layer out of range");
  const auto pairs = split_pairs(tree.d(), step, order);
  const auto children = tree.level(layer + 1);
  const auto ud = static_cast<std::size_t>(tree.d());
  const std::size_t nodes = tree.level(layer).size();
  std::vector<double> thetas;
  thetas.reserve(nodes * pairs.size());
  for (std::size_t w = 0; w < nodes; ++w) {
    const auto block = children.subspan(w * ud, ud);
    for (const SplitPair& p : pairs) {
      const double s = mass(block, p.stay);
      const double t = mass(block, p.move);
      thetas.push_back(s + t > 0.0 ? std::acos(std::min(1.0, std::sqrt(s / (s + t)))) : 0.0);
    }
  }
  return thetas;
}

Circuit synth_diagonal_with(const DiagonalSpec& spec, int n, int m, const StatePrepOptions& options) {
  spec.check();
  if (spec.n > n) throw std::invalid_argument("synth_diagonal_with: diagonal wider than the register");
  const QuditSystem system{spec.d, n, m};
  switch (options.backend.kind) {
    case DiagonalBackend::Kind::sequential:
      return synth_sequential(spec, options.transform).remapped(system, identity_map(spec.n));
    case DiagonalBackend::Kind::parallel: {
      auto map = identity_map(spec.n + m);
      for (int a = 0; a < m; ++a) map[static_cast<std::size_t>(spec.n + a)] = n + a;
      return synth_parallel(spec, m, options.transform).remapped(system, map);
    }
    case DiagonalBackend::Kind::routed: {
      const CouplingGraph* g = options.backend.graph;
      if (g == nullptr || g->node_count() != n) {
        throw std::invalid_argument("synth_diagonal_with: routed backend needs a graph with one node per main qudit");
      }
      const CouplingGraph sub = induced_prefix(*g, spec.n);
      if (sub.connected()) return synth_routed(spec, sub, options.transform).remapped(system, identity_map(spec.n));
      // Extend the diagonal to the whole register; trailing qudits see no phase.
      const std::uint64_t tail = checked_pow(spec.d, n - spec.n);
      DiagonalSpec full{spec.d, n, std::vector<double>(static_cast<std::size_t>(checked_pow(spec.d, n)))};
      for (std::size_t x = 0; x < full.beta.size(); ++x) full.beta[x] = spec.beta[x / tail];
      return synth_routed(full, *g, options.transform).remapped(system, identity_map(n));
    }
  }
  throw std::invalid_argument("synth_diagonal_with: unknown backend");
}

Circuit synth_state(const StateSpec& s, int m, const StatePrepOptions& options) {
  s.check();
  require_prime(s.d, "synth_state");
  if (m < 0) throw std::invalid_argument("synth_state: ancilla count must be >= 0");
  const int d = s.d;
  const int n = s.n;
  const AmplitudeTree tree = AmplitudeTree::build(s);
  const int steps = split_steps(d);
  Circuit out(QuditSystem{d, n, m});

  for (int layer = 0; layer < n; ++layer) {
    const std::size_t nodes = tree.level(layer).size();
    for (int j = 0; j < steps; ++j) {
      const auto pairs = split_pairs(d, j, options.order);
      if (pairs.empty()) continue;
      const auto thetas = layer_thetas(tree, layer, j, options.order);
      // Offsets the two levels of each pair by a quarter turn so the
      // H-U-H sandwich below rotates with real coefficients.
      const int gap = pairs.front().high - pairs.front().low;
      std::vector<double> r(static_cast<std::size_t>(d));
      for (int c = 0; c < d; ++c) r[static_cast<std::size_t>(c)] = std::numbers::pi * c / (2.0 * gap);
      std::vector<double> r_dag(r.size());
      for (std::size_t c = 0; c < r.size(); ++c) r_dag[c] = -r[c];

      DiagonalSpec u{d, layer + 1, std::vector<double>(nodes * static_cast<std::size_t>(d), 0.0)};
      for (std::size_t w = 0; w < nodes; ++w) {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const double theta = thetas[w * pairs.size() + p];
          u.beta[w * static_cast<std::size_t>(d) + static_cast<std::size_t>(pairs[p].low)] = theta;
          u.beta[w * static_cast<std::size_t>(d) + static_cast<std::size_t>(pairs[p].high)] = -theta;
        }
      }

      out.append(DiagSingle{layer, r});
      for (const SplitPair& p : pairs) out.append(TwoLevelH{layer, p.low, p.high});
      out.append(synth_diagonal_with(u, n, m, options));
      for (const SplitPair& p : pairs) out.append(TwoLevelH{layer, p.low, p.high});
      out.append(DiagSingle{layer, r_dag});
    }
  }

  DiagonalSpec phases{d, n, std::vector<double>(s.amplitudes.size(), 0.0)};
  bool any_phase = false;
  for (std::size_t k = 0; k < s.amplitudes.size(); ++k) {
    phases.beta[k] = std::arg(s.amplitudes[k]);
    any_phase = any_phase || phases.beta[k] != 0.0;
  }
  if (any_phase) out.append(synth_diagonal_with(phases, n, m, options));
  return out;
}

}  // namespace qforge
