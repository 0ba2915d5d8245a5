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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qforge {

class CouplingGraph;

/// Register shape: every qudit has d levels; ancillas follow the main register.
struct QuditSystem {
  int d = 2;
  int n_main = 1;
  int n_anc = 0;

  int total() const { return n_main + n_anc; }
  /// Throws std::invalid_argument on d < 2, n_main < 1 or n_anc < 0.
  void check() const;

  friend bool operator==(const QuditSystem&, const QuditSystem&) = default;
};

/// |a>|b> -> |a>|b + k*a mod d> on (control, target).
struct SumPow {
  int control = 0;
  int target = 1;
  int k = 1;
  friend bool operator==(const SumPow&, const SumPow&) = default;
};

/// diag(e^{i phases[0]}, ..., e^{i phases[d-1]}).
struct DiagSingle {
  int qudit = 0;
  std::vector<double> phases;
  friend bool operator==(const DiagSingle&, const DiagSingle&) = default;
};

/// Hadamard on span{|level_a>, |level_b>}: |a> -> (|a>+|b>)/sqrt2, |b> -> (|a>-|b>)/sqrt2.
struct TwoLevelH {
  int qudit = 0;
  int level_a = 0;
  int level_b = 1;
  friend bool operator==(const TwoLevelH&, const TwoLevelH&) = default;
};

/// |x> -> |x + k mod d>.
struct XPow {
  int qudit = 0;
  int k = 1;
  friend bool operator==(const XPow&, const XPow&) = default;
};

struct GlobalPhase {
  double angle = 0.0;
  friend bool operator==(const GlobalPhase&, const GlobalPhase&) = default;
};

using Gate = std::variant<SumPow, DiagSingle, TwoLevelH, XPow, GlobalPhase>;

/// Qudits a gate touches (empty for GlobalPhase).
std::vector<int> gate_support(const Gate& g);
bool is_two_qudit(const Gate& g);
Gate inverse(const Gate& g, int d);

/// Ordered gate list over a QuditSystem. Gates are checked on append, so a
/// Circuit never holds an out-of-range index or a malformed gate.
class Circuit {
 public:
  explicit Circuit(QuditSystem system);

  const QuditSystem& system() const { return system_; }
  int d() const { return system_.d; }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t gate_count() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws std::invalid_argument if the gate is malformed for this system.
  void append(Gate g);
  /// Appends `other` (applied after the current gates). Systems must match.
  void append(const Circuit& other);

  /// Copy of this circuit embedded in `target`, qudit i moved to qudit_map[i].
  Circuit remapped(const QuditSystem& target, std::span<const int> qudit_map) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  QuditSystem system_;
  std::vector<Gate> gates_;
};

/// a then b.
Circuit compose(const Circuit& a, const Circuit& b);
Circuit inverse(const Circuit& c);

/// Greedy left-to-right layering: each gate lands one layer after the last
/// layer used by any of its qudits. GlobalPhase occupies no layer.
std::size_t depth(const Circuit& c);

struct GateCounts {
  std::size_t two_qudit = 0;
  std::size_t single_qudit = 0;
  std::size_t sum = 0;
  std::size_t diag = 0;
  std::size_t h2 = 0;
  std::size_t x = 0;
  std::size_t gphase = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// With expand_sum_powers a SumPow of exponent k (and XPow of shift k)
/// counts as k gates; otherwise each is one gate.
GateCounts size(const Circuit& c, bool expand_sum_powers = false);

/// Rewrites every SumPow^k as k SumPow^1 gates and XPow^k as k XPow^1.
Circuit expand_sum_powers(const Circuit& c);

struct Violation {
  std::size_t gate_index = 0;
  std::string message;
};

/// Index-range problems against the graph's node count, and two-qudit gates
/// whose qudit pair is not an edge of `graph`. Empty result means valid.
std::vector<Violation> validate(const Circuit& c, const CouplingGraph* graph = nullptr);

}  // namespace qforge
