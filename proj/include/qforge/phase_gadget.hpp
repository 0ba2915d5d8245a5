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
#include <cstdint>
#include <span>
#include <vector>

namespace qforge {

/// diag(e^{i beta_0}, ..., e^{i beta_{d^n - 1}}) on n qudits. beta_0 is the
/// global phase: no phase gadget ever touches |0...0>.
struct DiagonalSpec {
  int d = 2;
  int n = 1;
  std::vector<double> beta;

  std::uint64_t dimension() const;
  /// Throws std::invalid_argument unless beta has exactly d^n finite entries.
  void check() const;
};

/// |x> -> e^{i alpha delta_t(<x, s> mod d)} |x>.
struct PhaseGadget {
  double alpha = 0.0;
  std::vector<int> s;
  int t = 1;
};

/// Angles of the canonical gadgets P_{alpha_j, s_j, 1}, where s_j is the
/// base-d representation of j + 1 over n digits (lexicographic order).
struct AlphaVector {
  int d = 2;
  int n = 1;
  std::vector<double> angles;

  std::vector<int> string_at(std::size_t j) const;
  /// Position of a nonzero string in `angles`.
  static std::size_t index_of(std::span<const int> s, int d);
};

enum class TransformMethod {
  automatic,  // naive up to d^n = 729, fast above
  naive,      // explicit O(d^2n) matrix-vector product
  fast,       // character transform over Z_d^n, O(n d^(n+1))
};

/// sum_i s1_i * s2_i mod d. Throws std::invalid_argument on length mismatch.
int inner_prod_mod_d(std::span<const int> s1, std::span<const int> s2, int d);

/// alpha = B * beta_+ where beta_+ = (beta_1, ..., beta_{d^n-1}). Requires prime d.
AlphaVector transform_beta_to_alpha(const DiagonalSpec& spec, TransformMethod method = TransformMethod::automatic);
/// beta_+ = A * alpha, beta_0 = 0. Requires prime d.
DiagonalSpec transform_alpha_to_beta(const AlphaVector& alpha, TransformMethod method = TransformMethod::automatic);

/// A_ij = delta_1(<s_i, s_j>), (d^n - 1) square.
Eigen::MatrixXd gadget_matrix_a(int d, int n);
/// B_ij = (delta_1(<s_i, s_j>) - delta_0(<s_i, s_j>)) / d^(n-1).
Eigen::MatrixXd gadget_matrix_b(int d, int n);

struct NormalizedGadgets {
  std::vector<PhaseGadget> gadgets;  // all with t = 1
  double global_phase = 0.0;
};

/// Rewrites P_{alpha,s,t} with t = 1 gadgets: P_{alpha, t^-1 s, 1} when t != 0,
/// otherwise e^{i alpha} prod_{j=1}^{d-1} P_{-alpha, j s, 1}. Requires prime d
/// and s != 0.
NormalizedGadgets normalize_gadget(const PhaseGadget& p, int d);

struct GadgetSum {
  AlphaVector alpha;
  double global_phase = 0.0;
};

/// Normalizes every gadget and adds angles sharing a canonical string.
GadgetSum accumulate_gadgets(std::span<const PhaseGadget> gadgets, int d, int n);

/// Phase each basis state picks up from one gadget (reference semantics).
std::vector<double> gadget_phases(const PhaseGadget& p, int d, int n);

}  // namespace qforge
