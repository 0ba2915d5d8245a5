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

// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "qforge/diagonal_synth.hpp"
#include "qforge/graycode.hpp"
#include "qforge/modular.hpp"
#include "qforge/phase_gadget.hpp"
#include "qforge/random.hpp"
#include "qforge/routing.hpp"
#include "qforge/simulator.hpp"
#include "qforge/state_prep.hpp"
#include "qforge/unitary_synth.hpp"
#include "test_util.hpp"

using namespace qforge;
using qforge::testing::diagonal_matrix;
using qforge::testing::fidelity;
using qforge::testing::prepared;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::uint64_t sites(int d, int n) { return (checked_pow(d, n) - 1) / static_cast<std::uint64_t>(d - 1); }

Outcome transform_inverse() {
  Outcome o;
  double worst_ab = 0.0, worst_trip = 0.0;
  const std::vector<std::pair<int, int>> shapes{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2},
                                                {3, 3}, {3, 4}, {5, 1}, {5, 2}};
  for (auto [d, n] : shapes) {
    const Eigen::MatrixXd ab = gadget_matrix_a(d, n) * gadget_matrix_b(d, n);
    worst_ab = std::max(worst_ab, (ab - Eigen::MatrixXd::Identity(ab.rows(), ab.cols())).cwiseAbs().maxCoeff());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const DiagonalSpec spec = random_diagonal(d, n, seed);
      const DiagonalSpec back = transform_alpha_to_beta(transform_beta_to_alpha(spec));
      for (std::size_t i = 0; i < spec.beta.size(); ++i) worst_trip = std::max(worst_trip, std::abs(back.beta[i] - spec.beta[i]));
    }
  }
  o.require(worst_ab <= 1e-12, fmt("A*B deviates from I by %.3g", worst_ab));
  o.require(worst_trip <= 1e-10, fmt("round trip error %.3g", worst_trip));
  if (o.ok) o.detail = fmt("max |AB - I| = %.2g, round trip %.2g", worst_ab, worst_trip);
  return o;
}

Outcome gate_counts() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    const GateCounts c = size(synth_sequential(random_diagonal(3, n, static_cast<std::uint64_t>(n))));
    const std::uint64_t bound = sites(3, n);
    o.require(c.sum <= bound && c.diag <= bound, "n=" + std::to_string(n) + " exceeds the bound");
    o.require(c.diag == bound && c.sum == bound - 1,
              "n=" + std::to_string(n) + ": " + std::to_string(c.diag) + " diag, " + std::to_string(c.sum) + " sum");
  }
  if (o.ok) o.detail = "d=3, n=2..7: exactly (3^n-1)/2 DiagSingle and one fewer SumPow";
  return o;
}

Outcome diagonal_correctness() {
  Outcome o;
  double worst = 0.0;
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 2}}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const DiagonalSpec spec = random_diagonal(d, n, seed);
      worst = std::max(worst, max_deviation_up_to_global_phase(unitary_of(synth_sequential(spec)), diagonal_matrix(spec)));
    }
  }
  o.require(worst <= 1e-9, fmt("max deviation %.3g", worst));
  if (o.ok) o.detail = fmt("300 instances, max deviation %.2g", worst);
  return o;
}

Outcome gray_code() {
  Outcome o;
  std::vector<std::string> words;
  for (const auto& w : gray_sequence(3, 2)) words.push_back(to_string(w));
  o.require(words == std::vector<std::string>{"00", "01", "02", "12", "10", "11", "21", "22", "20"},
            "gray_sequence(3,2) differs from the reference listing");
  for (int d : {2, 3, 5, 7}) {
    for (int n = 1; checked_pow(d, n) <= 2187; ++n) {
      const auto seq = gray_sequence(d, n);
      std::vector<bool> seen(seq.size(), false);
      for (std::size_t b = 0; b < seq.size(); ++b) {
        std::uint64_t idx = 0;
        for (int k = n - 1; k >= 0; --k) idx = idx * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(seq[b][static_cast<std::size_t>(k)]);
        seen[idx] = true;
        const auto& next = seq[(b + 1) % seq.size()];
        int changed = 0;
        for (int k = 0; k < n; ++k) {
          const auto ku = static_cast<std::size_t>(k);
          if (next[ku] == seq[b][ku]) continue;
          ++changed;
          o.require(next[ku] == (seq[b][ku] + 1) % d, "step is not +1 mod d");
        }
        o.require(changed == 1, "step changes " + std::to_string(changed) + " digits");
      }
      o.require(std::find(seen.begin(), seen.end(), false) == seen.end(), "incomplete coverage");
    }
  }
  if (o.ok) o.detail = "reference listing matches; coverage, +1 steps and closure for d^n <= 3^7";
  return o;
}

Outcome parallel_depth() {
  Outcome o;
  const DiagonalSpec spec = random_diagonal(3, 10, 0);
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t d0 = depth(synth_parallel(spec, 0));
  const std::size_t d300 = depth(synth_parallel(spec, 300));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(d300 <= 1000, "depth(m=300) = " + std::to_string(d300));
  o.require(static_cast<double>(d0) / static_cast<double>(d300) >= 20.0, fmt("ratio %.2f", double(d0) / double(d300)));
  o.require(secs <= 60.0, fmt("took %.1f s", secs));
  double worst = 0.0;
  for (int m = 0; m <= 8; ++m) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const DiagonalSpec small = random_diagonal(3, 4, seed);
      worst = std::max(worst, max_deviation_up_to_global_phase(main_register_action(synth_parallel(small, m)), diagonal_matrix(small)));
    }
  }
  o.require(worst <= 1e-9, fmt("n=4 oracle deviation %.3g", worst));
  if (o.ok) {
    o.detail = "n=10 depth " + std::to_string(d0) + " -> " + std::to_string(d300) + " (ratio " +
               fmt("%.1f) in %.1f s", double(d0) / double(d300), secs) + fmt("; n=4 oracle %.2g", worst);
  }
  return o;
}

Outcome routed() {
  Outcome o;
  double worst = 0.0;
  for (int d : {2, 3}) {
    for (int n : {3, 4}) {
      for (const auto& g : {CouplingGraph::line(n), CouplingGraph::ring(n)}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          const DiagonalSpec spec = random_diagonal(d, n, seed);
          const Circuit c = synth_routed(spec, g);
          o.require(validate(c, &g).empty(), "circuit violates the coupling graph");
          worst = std::max(worst, max_deviation_up_to_global_phase(unitary_of(c), diagonal_matrix(spec)));
        }
      }
    }
  }
  o.require(worst <= 1e-9, fmt("routed oracle deviation %.3g", worst));
  double stair = 0.0;
  for (int d : {2, 3, 5}) {
    for (int len = 1; len <= 4 && checked_pow(d, len + 1) <= 729; ++len) {
      const int n = len + 1;
      const auto g = CouplingGraph::line(n);
      std::vector<int> path(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) path[static_cast<std::size_t>(i)] = i;
      for (int k = 1; k < d; ++k) {
        Circuit got(QuditSystem{d, n, 0}), want(QuditSystem{d, n, 0});
        for (const Gate& gate : stair_expand(SumPow{0, n - 1, k}, path, g, d)) got.append(gate);
        want.append(SumPow{0, n - 1, k});
        stair = std::max(stair, (unitary_of(got) - unitary_of(want)).cwiseAbs().maxCoeff());
      }
    }
  }
  o.require(stair <= 1e-12, fmt("stair expansion deviation %.3g", stair));
  if (o.ok) o.detail = fmt("routed oracle %.2g, stair expansion %.2g", worst, stair);
  return o;
}

Outcome state_prep() {
  Outcome o;
  const StateSpec fig{3, 2, {0.7, 0.1, 0.1, 0.3, 0.6, 0.1, 0.1, 0.1, 0.1}};
  const double f = fidelity(fig.amplitudes, prepared(synth_state(fig)));
  o.require(f >= 1 - 1e-9, fmt("worked example fidelity %.12f", f));
  const auto th = layer_thetas(build_tree(fig), 1, 0);
  const double want[3] = {std::acos(std::sqrt(0.5) / std::sqrt(0.51)), std::acos(std::sqrt(0.45) / std::sqrt(0.46)),
                          std::acos(std::sqrt(0.02) / std::sqrt(0.03))};
  for (int i = 0; i < 3; ++i) o.require(std::abs(th[static_cast<std::size_t>(i)] - want[i]) <= 1e-12, "angle mismatch");
  double worst = 1.0;
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {5, 2}}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const StateSpec s = random_state(d, n, seed);
      worst = std::min(worst, fidelity(s.amplitudes, prepared(synth_state(s))));
    }
  }
  o.require(worst >= 1 - 1e-9, fmt("random state fidelity %.12f", worst));
  if (o.ok) o.detail = fmt("worked example fidelity 1 - %.1e, worst random fidelity 1 - %.1e", 1 - f, 1 - worst);
  return o;
}

Outcome qhr() {
  Outcome o;
  double recon = 0.0, circuit = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DenseUnitary u = haar_unitary(9, seed);
    const QhrFactorization f = qhr_factor(u, 3, 2);
    DenseUnitary p = DenseUnitary::Identity(9, 9);
    for (const Reflection& r : f.reflections) p = p * reflection_matrix(r);
    p = p * diagonal_matrix(f.residual);
    recon = std::max(recon, (p - u).cwiseAbs().maxCoeff());
    if (seed < 5) circuit = std::max(circuit, max_deviation_up_to_global_phase(unitary_of(synth_unitary(u, 3, 2)), u));
  }
  o.require(recon <= 1e-8, fmt("reconstruction error %.3g", recon));
  o.require(circuit <= 1e-7, fmt("circuit deviation %.3g", circuit));
  if (o.ok) o.detail = fmt("reconstruction %.2g, circuit oracle %.2g", recon, circuit);
  return o;
}

Outcome asymptotic_properties() {
  Outcome o;
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {2, 7}}) {
    const DiagonalSpec spec = random_diagonal(d, n, 9);
    std::size_t prev = depth(synth_parallel(spec, 0));
    for (int m = 1; m <= 30; ++m) {
      const Circuit c = synth_parallel(spec, m);
      const std::size_t now = depth(c);
      o.require(now <= prev, "depth grows with m at d=" + std::to_string(d) + ", n=" + std::to_string(n));
      if (m % 10 == 0) {
        o.require(max_deviation_up_to_global_phase(main_register_action(c), diagonal_matrix(spec)) <= 1e-9, "oracle");
      }
      prev = now;
    }
  }
  for (int d : {2, 5, 7}) {
    for (int n = 1; checked_pow(d, n) <= 3000; ++n) {
      const GateCounts c = size(synth_sequential(random_diagonal(d, n, 1)));
      o.require(c.diag == sites(d, n) && c.sum + 1 == sites(d, n), "gate count at d=" + std::to_string(d));
    }
  }
  if (o.ok) o.detail = "property suites: monotone depth in m, exact gate counts, oracle equivalence";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"transform inverse", transform_inverse},   {"gate-count bound", gate_counts},
      {"diagonal correctness", diagonal_correctness}, {"gray code", gray_code},
      {"parallel depth trend", parallel_depth},  {"routed synthesis", routed},
      {"state preparation", state_prep},         {"householder factorization", qhr},
      {"asymptotic properties", asymptotic_properties}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %-26s %s  (%.1f s) %s\n", i + 1, criteria[i].first.c_str(), o.ok ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures;
}
