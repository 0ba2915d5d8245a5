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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "qforge/diagonal_synth.hpp"
#include "qforge/io.hpp"
#include "qforge/random.hpp"

using namespace qforge;
namespace fs = std::filesystem;

TEST(counter_rng, deterministic_and_addressable) {
  CounterRng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_EQ(a.counter(), 100u);
  CounterRng c(5);
  for (int i = 0; i < 10; ++i) c.next();
  EXPECT_EQ(c.next(), CounterRng::draw(5, 10));
  EXPECT_NE(CounterRng::draw(5, 0), CounterRng::draw(6, 0));
  // SplitMix64 of seed 0: first output.
  EXPECT_EQ(CounterRng::draw(0, 0), 0xE220A8397B1DCDAFull);
}

TEST(counter_rng, uniform_moments) {
  CounterRng r(11);
  const int count = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  const double mean = sum / count;
  EXPECT_NEAR(mean, 0.5, 3 * std::sqrt(1.0 / 12.0 / count));
  for (int i = 0; i < count; ++i) {
    const double z = r.normal();
    sq += z * z;
  }
  EXPECT_NEAR(sq / count, 1.0, 0.02);
}

TEST(random_diagonal, shape_range_and_determinism) {
  const DiagonalSpec a = random_diagonal(3, 4, 9);
  const DiagonalSpec b = random_diagonal(3, 4, 9);
  EXPECT_EQ(a.beta, b.beta);
  EXPECT_NE(a.beta, random_diagonal(3, 4, 10).beta);
  ASSERT_EQ(a.beta.size(), 81u);
  EXPECT_EQ(a.beta[0], 0.0);
  for (double x : a.beta) {
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 2 * std::numbers::pi);
  }
  const DiagonalSpec big = random_diagonal(3, 8, 1);
  double mean = 0.0;
  for (std::size_t i = 1; i < big.beta.size(); ++i) mean += big.beta[i];
  mean /= static_cast<double>(big.beta.size() - 1);
  const double sigma = 2 * std::numbers::pi / std::sqrt(12.0 * static_cast<double>(big.beta.size() - 1));
  EXPECT_NEAR(mean, std::numbers::pi, 3 * sigma);
  EXPECT_THROW(random_diagonal(3, 10, 1, 1000), CapExceeded);
}

TEST(random_state, normalized) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {5, 2}}) {
    const StateSpec s = random_state(d, n, 4);
    EXPECT_NO_THROW(s.check());
    double norm = 0.0;
    for (const cplx& a : s.amplitudes) norm += std::norm(a);
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
  EXPECT_EQ(random_state(3, 2, 8).amplitudes, random_state(3, 2, 8).amplitudes);
}

TEST(haar_unitary, unitary) {
  for (std::size_t dim : {2u, 8u, 9u, 27u}) {
    const DenseUnitary u = haar_unitary(dim, 3);
    const auto k = static_cast<Eigen::Index>(dim);
    EXPECT_LT((u.adjoint() * u - DenseUnitary::Identity(k, k)).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_EQ(haar_unitary(9, 1), haar_unitary(9, 1));
}

TEST(io_json, circuit_round_trip) {
  Circuit c(QuditSystem{3, 2, 1});
  c.append(SumPow{0, 2, 2});
  c.append(DiagSingle{1, {0.0, 0.5, -1.25}});
  c.append(TwoLevelH{2, 0, 2});
  c.append(XPow{0, 1});
  c.append(GlobalPhase{0.3});
  const io::Json j = io::circuit_to_json(c);
  EXPECT_EQ(j["gates"][0]["kind"], "sum");
  EXPECT_EQ(io::circuit_from_json(j), c);
  EXPECT_EQ(io::circuit_from_json(io::Json::parse(j.dump())), c);
}

TEST(io_json, specs_round_trip) {
  const DiagonalSpec diag = random_diagonal(3, 2, 1);
  EXPECT_EQ(io::diagonal_from_json(io::diagonal_to_json(diag)).beta, diag.beta);
  const StateSpec state = random_state(2, 3, 2);
  EXPECT_EQ(io::state_from_json(io::state_to_json(state)).amplitudes, state.amplitudes);
  const DenseUnitary u = haar_unitary(9, 2);
  int d = 0, n = 0;
  EXPECT_EQ(io::unitary_from_json(io::unitary_to_json(u, 3, 2), d, n), u);
  EXPECT_EQ(d, 3);
  EXPECT_EQ(n, 2);
  const CouplingGraph g = CouplingGraph::ring(4);
  const CouplingGraph back = io::graph_from_json(io::graph_to_json(g));
  EXPECT_EQ(back.node_count(), 4);
  EXPECT_TRUE(back.has_edge(3, 0));
}

TEST(io_json, file_round_trip) {
  const fs::path path = fs::temp_directory_path() / "qforge_io_test.json";
  const io::Json j = io::diagonal_to_json(random_diagonal(2, 3, 7));
  io::write_json(path, j);
  EXPECT_EQ(io::read_json(path), j);
  fs::remove(path);
  EXPECT_THROW(io::read_json(path), std::runtime_error);
}

TEST(io_json, schema_errors) {
  using io::Json;
  EXPECT_THROW(io::circuit_from_json(Json::parse(R"({"d":3,"n_main":1})")), io::SchemaError);
  EXPECT_THROW(io::circuit_from_json(Json::parse(R"({"d":3,"n_main":1,"n_anc":0,"gates":[{"kind":"cz"}]})")),
               io::SchemaError);
  EXPECT_THROW(io::circuit_from_json(Json::parse(R"({"d":3,"n_main":1,"n_anc":0,"gates":[{"kind":"sum","control":0}]})")),
               io::SchemaError);
  EXPECT_THROW(io::diagonal_from_json(Json::parse(R"({"d":3,"n":1,"beta":[0,1]})")), std::invalid_argument);
  EXPECT_THROW(io::state_from_json(Json::parse(R"({"d":2,"n":1,"amplitudes":[1,0]})")), io::SchemaError);
  EXPECT_THROW(io::graph_from_json(Json::parse(R"({"nodes":2,"edges":[[0,5]]})")), std::invalid_argument);
}
