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

#include "qforge/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qforge/coupling_graph.hpp"

namespace qforge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_gate(const Gate& g, const QuditSystem& s) {
  const int total = s.total();
  auto in_range = [&](int q, const char* role) {
    if (q < 0 || q >= total) {
      throw std::invalid_argument(std::string(role) + " qudit " + std::to_string(q) +
                                  " out of range for " + std::to_string(total) + " qudits");
    }
  };
  std::visit(overloaded{
                 [&](const SumPow& x) {
                   in_range(x.control, "control");
                   in_range(x.target, "target");
                   if (x.control == x.target) throw std::invalid_argument("SumPow: control == target");
                   if (x.k < 1 || x.k >= s.d) throw std::invalid_argument("SumPow: exponent outside 1..d-1");
                 },
                 [&](const DiagSingle& x) {
                   in_range(x.qudit, "diag");
                   if (static_cast<int>(x.phases.size()) != s.d) {
                     throw std::invalid_argument("DiagSingle: expected d phases");
                   }
                   for (double p : x.phases) {
                     if (!std::isfinite(p)) throw std::invalid_argument("DiagSingle: non-finite phase");
                   }
                 },
                 [&](const TwoLevelH& x) {
                   in_range(x.qudit, "h2");
                   if (x.level_a == x.level_b || x.level_a < 0 || x.level_b < 0 || x.level_a >= s.d ||
                       x.level_b >= s.d) {
                     throw std::invalid_argument("TwoLevelH: levels must be distinct values in [d]");
                   }
                 },
                 [&](const XPow& x) {
                   in_range(x.qudit, "x");
                   if (x.k < 1 || x.k >= s.d) throw std::invalid_argument("XPow: shift outside 1..d-1");
                 },
                 [&](const GlobalPhase& x) {
                   if (!std::isfinite(x.angle)) throw std::invalid_argument("GlobalPhase: non-finite angle");
                 },
             },
             g);
}

}  // namespace

void QuditSystem::check() const {
  if (d < 2) throw std::invalid_argument("QuditSystem: d must be >= 2");
  if (n_main < 1) throw std::invalid_argument("QuditSystem: n_main must be >= 1");
  if (n_anc < 0) throw std::invalid_argument("QuditSystem: n_anc must be >= 0");
}

std::vector<int> gate_support(const Gate& g) {
  return std::visit(overloaded{
                        [](const SumPow& x) { return std::vector<int>{x.control, x.target}; },
                        [](const DiagSingle& x) { return std::vector<int>{x.qudit}; },
                        [](const TwoLevelH& x) { return std::vector<int>{x.qudit}; },
                        [](const XPow& x) { return std::vector<int>{x.qudit}; },
                        [](const GlobalPhase&) { return std::vector<int>{}; },
                    },
                    g);
}

bool is_two_qudit(const Gate& g) { return std::holds_alternative<SumPow>(g); }

Gate inverse(const Gate& g, int d) {
  return std::visit(overloaded{
                        [d](const SumPow& x) -> Gate { return SumPow{x.control, x.target, d - x.k}; },
                        [](const DiagSingle& x) -> Gate {
                          DiagSingle inv{x.qudit, x.phases};
                          for (double& p : inv.phases) p = -p;
                          return inv;
                        },
                        [](const TwoLevelH& x) -> Gate { return x; },
                        [d](const XPow& x) -> Gate { return XPow{x.qudit, d - x.k}; },
                        [](const GlobalPhase& x) -> Gate { return GlobalPhase{-x.angle}; },
                    },
                    g);
}

Circuit::Circuit(QuditSystem system) : system_(system) { system_.check(); }

void Circuit::append(Gate g) {
  check_gate(g, system_);
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (!(other.system_ == system_)) throw std::invalid_argument("Circuit::append: system mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::remapped(const QuditSystem& target, std::span<const int> qudit_map) const {
  if (static_cast<int>(qudit_map.size()) != system_.total()) {
    throw std::invalid_argument("Circuit::remapped: map size must equal qudit count");
  }
  if (target.d != system_.d) throw std::invalid_argument("Circuit::remapped: level count mismatch");
  auto m = [&](int q) { return qudit_map[static_cast<std::size_t>(q)]; };
  Circuit out(target);
  for (const Gate& g : gates_) {
    out.append(std::visit(overloaded{
                              [&](const SumPow& x) -> Gate { return SumPow{m(x.control), m(x.target), x.k}; },
                              [&](const DiagSingle& x) -> Gate { return DiagSingle{m(x.qudit), x.phases}; },
                              [&](const TwoLevelH& x) -> Gate {
                                return TwoLevelH{m(x.qudit), x.level_a, x.level_b};
                              },
                              [&](const XPow& x) -> Gate { return XPow{m(x.qudit), x.k}; },
                              [](const GlobalPhase& x) -> Gate { return x; },
                          },
                          g));
  }
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.system());
  const auto gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.append(inverse(*it, c.d()));
  return out;
}

std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> last(static_cast<std::size_t>(c.system().total()), 0);
  std::size_t result = 0;
  for (const Gate& g : c.gates()) {
    const auto support = gate_support(g);
    if (support.empty()) continue;
    std::size_t layer = 0;
    for (int q : support) layer = std::max(layer, last[static_cast<std::size_t>(q)]);
    ++layer;
    for (int q : support) last[static_cast<std::size_t>(q)] = layer;
    result = std::max(result, layer);
  }
  return result;
}

GateCounts size(const Circuit& c, bool expand_sum_powers) {
  GateCounts n;
  for (const Gate& g : c.gates()) {
    std::visit(overloaded{
                   [&](const SumPow& x) {
                     const std::size_t w = expand_sum_powers ? static_cast<std::size_t>(x.k) : 1;
                     n.sum += w;
                     n.two_qudit += w;
                   },
                   [&](const DiagSingle&) {
                     ++n.diag;
                     ++n.single_qudit;
                   },
                   [&](const TwoLevelH&) {
                     ++n.h2;
                     ++n.single_qudit;
                   },
                   [&](const XPow& x) {
                     const std::size_t w = expand_sum_powers ? static_cast<std::size_t>(x.k) : 1;
                     n.x += w;
                     n.single_qudit += w;
                   },
                   [&](const GlobalPhase&) { ++n.gphase; },
               },
               g);
  }
  return n;
}

Circuit expand_sum_powers(const Circuit& c) {
  Circuit out(c.system());
  for (const Gate& g : c.gates()) {
    if (const auto* s = std::get_if<SumPow>(&g)) {
      for (int i = 0; i < s->k; ++i) out.append(SumPow{s->control, s->target, 1});
    } else if (const auto* x = std::get_if<XPow>(&g)) {
      for (int i = 0; i < x->k; ++i) out.append(XPow{x->qudit, 1});
    } else {
      out.append(g);
    }
  }
  return out;
}

std::vector<Violation> validate(const Circuit& c, const CouplingGraph* graph) {
  std::vector<Violation> out;
  const int limit = graph ? graph->node_count() : c.system().total();
  const auto gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto support = gate_support(gates[i]);
    bool in_range = true;
    for (int q : support) {
      if (q < 0 || q >= limit) {
        out.push_back({i, "qudit " + std::to_string(q) + " outside [0, " + std::to_string(limit) + ")"});
        in_range = false;
      }
    }
    if (graph && in_range && support.size() == 2 && !graph->has_edge(support[0], support[1])) {
      out.push_back({i, "pair (" + std::to_string(support[0]) + ", " + std::to_string(support[1]) +
                            ") is not a coupling edge"});
    }
  }
  return out;
}

}  // namespace qforge
