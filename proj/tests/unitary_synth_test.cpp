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

#include "qforge/unitary_synth.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "qforge/modular.hpp"
#include "qforge/random.hpp"
#include "test_util.hpp"

using namespace qforge;
using qforge::testing::diagonal_matrix;

namespace {

DenseUnitary product(const QhrFactorization& f) {
  const auto dim = static_cast<Eigen::Index>(f.residual.beta.size());
  DenseUnitary p = DenseUnitary::Identity(dim, dim);
  for (const Reflection& r : f.reflections) p = p * reflection_matrix(r);
  return p * diagonal_matrix(f.residual);
}

Reflection random_reflection(std::size_t dim, double phi, std::uint64_t seed) {
  const StateSpec s = random_state(static_cast<int>(dim), 1, seed);
  return Reflection{s.amplitudes, phi};
}

}  // namespace

TEST(reflection_matrix, examples) {
  const Reflection e0{{1.0, 0.0, 0.0}, std::numbers::pi};
  const DenseUnitary m = reflection_matrix(e0);
  EXPECT_LT((m - diagonal_matrix({std::numbers::pi, 0.0, 0.0})).cwiseAbs().maxCoeff(), 1e-15);
  const Reflection r = random_reflection(9, 0.0, 1);
  EXPECT_LT((reflection_matrix(r) - DenseUnitary::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(reflection_matrix(Reflection{{1.0, 1.0}, 1.0}), std::invalid_argument);
}

TEST(reflection_matrix, properties) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Reflection r = random_reflection(9, std::numbers::pi, seed);
    const DenseUnitary m = reflection_matrix(r);
    EXPECT_LT((m * m - DenseUnitary::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    const double phi = 0.3 + static_cast<double>(seed);
    Reflection a = r, b = r;
    a.phi = phi;
    b.phi = -phi;
    EXPECT_LT((reflection_matrix(a) * reflection_matrix(b) - DenseUnitary::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((reflection_matrix(a).adjoint() * reflection_matrix(a) - DenseUnitary::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(qhr_factor, identity_and_diagonal) {
  const auto id = qhr_factor(DenseUnitary::Identity(9, 9), 3, 2);
  EXPECT_TRUE(id.reflections.empty());
  for (double b : id.residual.beta) EXPECT_NEAR(b, 0.0, 1e-15);

  const DiagonalSpec spec = random_diagonal(3, 2, 6);
  const auto diag = qhr_factor(diagonal_matrix(spec), 3, 2);
  EXPECT_TRUE(diag.reflections.empty());
  EXPECT_LT((diagonal_matrix(diag.residual) - diagonal_matrix(spec)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(qhr_factor, haar_reconstruction) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {5, 1}, {2, 4}}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto dim = static_cast<std::size_t>(checked_pow(d, n));
      const DenseUnitary u = haar_unitary(dim, seed);
      const QhrFactorization f = qhr_factor(u, d, n);
      EXPECT_LE(f.reflections.size(), dim);
      for (const Reflection& r : f.reflections) {
        EXPECT_DOUBLE_EQ(r.phi, std::numbers::pi);
        const DenseUnitary m = reflection_matrix(r);
        EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
      }
      EXPECT_LT((product(f) - u).cwiseAbs().maxCoeff(), 1e-8) << d << "," << n << " seed " << seed;
    }
  }
}

TEST(qhr_factor, errors) {
  EXPECT_THROW(qhr_factor(DenseUnitary::Identity(8, 8), 3, 2), std::invalid_argument);
  DenseUnitary bad = DenseUnitary::Identity(9, 9);
  bad(0, 1) = 0.5;
  EXPECT_THROW(qhr_factor(bad, 3, 2), std::invalid_argument);
}

TEST(reflection_to_circuit, oracles) {
  // phi = 0 is the identity whatever v is.
  const Reflection flat = random_reflection(9, 0.0, 3);
  EXPECT_LT(max_deviation_up_to_global_phase(unitary_of(reflection_to_circuit(flat, 3, 2)), DenseUnitary::Identity(9, 9)),
            1e-8);
  // v = |00>: a phase on |00> only.
  std::vector<cplx> e0(9, 0.0);
  e0[0] = 1.0;
  const Reflection axis{e0, 1.1};
  EXPECT_LT(max_deviation_up_to_global_phase(unitary_of(reflection_to_circuit(axis, 3, 2)),
                                             diagonal_matrix({1.1, 0, 0, 0, 0, 0, 0, 0, 0})),
            1e-8);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Reflection r = random_reflection(9, 0.4 + static_cast<double>(seed), 10 + seed);
    EXPECT_LT(max_deviation_up_to_global_phase(unitary_of(reflection_to_circuit(r, 3, 2)), reflection_matrix(r)), 1e-8);
  }
  EXPECT_THROW(reflection_to_circuit(Reflection{std::vector<cplx>(4, 0.5), 1.0}, 4, 1), std::invalid_argument);
}

TEST(synth_unitary, oracles) {
  EXPECT_LT(max_deviation_up_to_global_phase(unitary_of(synth_unitary(DenseUnitary::Identity(9, 9), 3, 2)),
                                             DenseUnitary::Identity(9, 9)),
            1e-7);
  Circuit sum(QuditSystem{3, 2, 0});
  sum.append(SumPow{0, 1, 1});
  const DenseUnitary s = unitary_of(sum);
  EXPECT_LT(max_deviation_up_to_global_phase(unitary_of(synth_unitary(s, 3, 2)), s), 1e-7);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const DenseUnitary u = haar_unitary(9, 50 + seed);
    EXPECT_LT(max_deviation_up_to_global_phase(unitary_of(synth_unitary(u, 3, 2)), u), 1e-7);
  }
  const DenseUnitary q = haar_unitary(8, 3);
  EXPECT_LT(max_deviation_up_to_global_phase(unitary_of(synth_unitary(q, 2, 3)), q), 1e-7);
}

TEST(synth_unitary, with_ancillas) {
  const DenseUnitary u = haar_unitary(9, 7);
  const StatePrepOptions parallel{SplitOrder::interval, {DiagonalBackend::Kind::parallel, nullptr}, TransformMethod::automatic};
  const Circuit c = synth_unitary(u, 3, 2, 2, parallel);
  EXPECT_EQ(c.system().n_anc, 2);
  SimulatorOptions dense;
  dense.basis_tracking = false;
  EXPECT_LT(max_deviation_up_to_global_phase(main_register_action(c, dense), u), 1e-7);
}
