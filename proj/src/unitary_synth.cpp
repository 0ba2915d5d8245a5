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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qforge/modular.hpp"

namespace qforge {

namespace {

constexpr double kAxisTol = 1e-12;

Eigen::VectorXcd as_vector(const std::vector<cplx>& v) {
  return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

DenseUnitary reflection_matrix(const Reflection& r) {
  if (r.v.empty()) throw std::invalid_argument("reflection_matrix: empty vector");
  const Eigen::VectorXcd v = as_vector(r.v);
  if (std::abs(v.norm() - 1.0) > 1e-12) throw std::invalid_argument("reflection_matrix: v is not normalized");
  const auto dim = v.size();
  return DenseUnitary::Identity(dim, dim) + (std::polar(1.0, r.phi) - 1.0) * v * v.adjoint();
}

QhrFactorization qhr_factor(const DenseUnitary& u, int d, int n) {
  const auto dim = static_cast<Eigen::Index>(checked_pow(d, n));
  if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("qhr_factor: matrix is not d^n square");
  const double err = (u.adjoint() * u - DenseUnitary::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (err > 1e-10) throw std::invalid_argument("qhr_factor: matrix is not unitary");

  QhrFactorization out{{}, DiagonalSpec{d, n, std::vector<double>(static_cast<std::size_t>(dim), 0.0)}};
  DenseUnitary work = u;
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::VectorXcd col = work.col(i);
    const cplx pivot = col(i);
    const double off = std::sqrt(std::max(0.0, col.squaredNorm() - std::norm(pivot)));
    if (off <= kAxisTol) {
      out.residual.beta[static_cast<std::size_t>(i)] = std::arg(pivot);
      continue;
    }
    // M = I - 2|v><v| sends col to e^{i gamma} e_i; the rows above i are
    // already zero, so M leaves the finished columns alone.
    const cplx target = std::polar(1.0, std::arg(pivot) + std::numbers::pi);
    Eigen::VectorXcd w = col;
    w(i) -= target;
    w /= w.norm();
    Reflection r{std::vector<cplx>(w.data(), w.data() + w.size()), std::numbers::pi};
    work = (DenseUnitary::Identity(dim, dim) - 2.0 * w * w.adjoint()) * work;
    out.residual.beta[static_cast<std::size_t>(i)] = std::arg(target);
    out.reflections.push_back(std::move(r));
  }
  return out;
}

Circuit reflection_to_circuit(const Reflection& r, int d, int n, int m, const StatePrepOptions& options) {
  require_prime(d, "reflection_to_circuit");
  const std::uint64_t dim = checked_pow(d, n);
  if (r.v.size() != dim) throw std::invalid_argument("reflection_to_circuit: vector length is not d^n");
  const StateSpec state{d, n, r.v};
  state.check(1e-12);
  const Circuit prep = synth_state(state, m, options);

  DiagonalSpec zero_phase{d, n, std::vector<double>(static_cast<std::size_t>(dim), 0.0)};
  zero_phase.beta[0] = r.phi;
  Circuit out = inverse(prep);
  out.append(synth_diagonal_with(zero_phase, n, m, options));
  out.append(prep);
  return out;
}

Circuit synth_unitary(const DenseUnitary& u, int d, int n, int m, const StatePrepOptions& options) {
  require_prime(d, "synth_unitary");
  const QhrFactorization f = qhr_factor(u, d, n);
  Circuit out = synth_diagonal_with(f.residual, n, m, options);
  for (auto it = f.reflections.rbegin(); it != f.reflections.rend(); ++it) {
    out.append(reflection_to_circuit(*it, d, n, m, options));
  }
  return out;
}

}  // namespace qforge
