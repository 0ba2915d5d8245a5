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

#include "qforge/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qforge/kernels.hpp"
#include "qforge/modular.hpp"

namespace qforge {

namespace {

std::uint64_t dimension_checked(int d, int n, std::uint64_t cap, const char* what) {
  std::uint64_t dim = 0;
  try {
    dim = checked_pow(d, n);
  } catch (const std::overflow_error&) {
    throw CapExceeded(std::string(what) + ": dimension overflows");
  }
  if (dim > cap) {
    throw CapExceeded(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds cap " +
                      std::to_string(cap));
  }
  return dim;
}

void check_register(const Circuit& c, int d, int n) {
  if (c.d() != d) throw std::invalid_argument("simulator: level count mismatch");
  if (c.system().total() > n) throw std::invalid_argument("simulator: circuit uses more qudits than the state");
}

// Columns per batch so a batch never holds more than ~2^22 amplitudes.
std::size_t batch_columns(std::uint64_t full_dim) {
  constexpr std::uint64_t budget = std::uint64_t{1} << 22;
  return static_cast<std::size_t>(std::max<std::uint64_t>(1, budget / full_dim));
}

}  // namespace

SimulatorOptions options_from_env() {
  SimulatorOptions options;
  if (const char* cap = std::getenv("QFORGE_DIM_CAP")) {
    try {
      const long long v = std::stoll(cap);
      if (v > 0) options.dim_cap = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("QFORGE_DIM_CAP is not an integer: ") + cap);
    }
  }
  return options;
}

StateVector::StateVector(int d, int n) : d_(d), n_(n) {
  if (d < 2 || d > kernels::kMaxLevels || n < 1) throw std::invalid_argument("StateVector: bad shape");
  amps_.assign(static_cast<std::size_t>(checked_pow(d, n)), cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int d, int n, std::vector<cplx> amplitudes) : d_(d), n_(n), amps_(std::move(amplitudes)) {
  if (d < 2 || d > kernels::kMaxLevels || n < 1) throw std::invalid_argument("StateVector: bad shape");
  if (amps_.size() != checked_pow(d, n)) throw std::invalid_argument("StateVector: amplitude count is not d^n");
}

StateVector StateVector::basis(int d, int n, std::uint64_t index) {
  StateVector s(d, n);
  if (index >= s.dimension()) throw std::invalid_argument("StateVector::basis: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[static_cast<std::size_t>(index)] = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const cplx& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void apply_gate(StateVector& s, const Gate& g, bool parallel) {
  for (int q : gate_support(g)) {
    if (q < 0 || q >= s.n()) throw std::invalid_argument("apply_gate: qudit " + std::to_string(q) + " out of range");
  }
  if (parallel) {
    kernels::omp::apply_gate(s.amplitudes(), s.d(), s.n(), g);
  } else {
    kernels::serial::apply_gate(s.amplitudes(), s.d(), s.n(), g);
  }
}

StateVector run(const Circuit& c, StateVector s, bool parallel) {
  check_register(c, s.d(), s.n());
  for (const Gate& g : c.gates()) apply_gate(s, g, parallel);
  return s;
}

DenseUnitary unitary_of(const Circuit& c, const SimulatorOptions& options) {
  const int d = c.d();
  const int n = c.system().total();
  const auto dim = static_cast<std::size_t>(dimension_checked(d, n, options.dim_cap, "unitary_of"));
  std::vector<cplx> data(dim * dim, cplx{0.0, 0.0});
  for (std::size_t col = 0; col < dim; ++col) data[col * dim + col] = 1.0;
  if (options.parallel) {
    kernels::omp::evolve_columns(data, dim, d, n, c.gates());
  } else {
    kernels::serial::evolve_columns(data, dim, d, n, c.gates());
  }
  return Eigen::Map<const DenseUnitary>(data.data(), static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

bool is_monomial(const Circuit& c) {
  return std::none_of(c.gates().begin(), c.gates().end(),
                      [](const Gate& g) { return std::holds_alternative<TwoLevelH>(g); });
}

DenseUnitary main_register_action(const Circuit& c, const SimulatorOptions& options) {
  const QuditSystem& sys = c.system();
  const int d = sys.d;
  const auto dim = static_cast<std::size_t>(dimension_checked(d, sys.n_main, options.dim_cap, "main_register_action"));
  if (options.basis_tracking && is_monomial(c)) {
    DenseUnitary out = DenseUnitary::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<int> digits(static_cast<std::size_t>(sys.total()), 0);
    for (std::size_t x = 0; x < dim; ++x) {
      const auto main = to_digits(x, d, sys.n_main);
      std::copy(main.begin(), main.end(), digits.begin());
      const BasisImage image = track_basis(c, digits);
      const bool restored = std::all_of(image.digits.begin() + sys.n_main, image.digits.end(), [](int v) { return v == 0; });
      if (!restored) continue;
      const auto row = from_digits(std::span<const int>(image.digits.data(), static_cast<std::size_t>(sys.n_main)), d);
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(x)) = std::polar(1.0, image.phase);
    }
    return out;
  }
  if (sys.n_anc == 0) return unitary_of(c, options);
  const auto full = static_cast<std::size_t>(dimension_checked(d, sys.total(), options.state_cap, "main_register_action"));
  const std::size_t anc_dim = full / dim;

  DenseUnitary out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::size_t batch = batch_columns(full);
  std::vector<cplx> data;
  for (std::size_t first = 0; first < dim; first += batch) {
    const std::size_t cols = std::min(batch, dim - first);
    data.assign(cols * full, cplx{0.0, 0.0});
    // |x>|0^m> sits at flat index x * d^m.
    for (std::size_t j = 0; j < cols; ++j) data[j * full + (first + j) * anc_dim] = 1.0;
    if (options.parallel) {
      kernels::omp::evolve_columns(data, cols, d, sys.total(), c.gates());
    } else {
      kernels::serial::evolve_columns(data, cols, d, sys.total(), c.gates());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t row = 0; row < dim; ++row) {
        out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(first + j)) = data[j * full + row * anc_dim];
      }
    }
  }
  return out;
}

double max_deviation_up_to_global_phase(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw std::invalid_argument("max_deviation_up_to_global_phase: dimension mismatch");
  if (u.empty()) return 0.0;
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[pivot])) pivot = i;
  }
  cplx phase{1.0, 0.0};
  if (std::abs(v[pivot]) > 0.0 && std::abs(u[pivot]) > 0.0) {
    const cplx ratio = u[pivot] / v[pivot];
    phase = ratio / std::abs(ratio);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::abs(u[i] - phase * v[i]));
  return worst;
}

double max_deviation_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("max_deviation_up_to_global_phase: dimension mismatch");
  }
  return max_deviation_up_to_global_phase(std::span<const cplx>(u.data(), static_cast<std::size_t>(u.size())),
                                          std::span<const cplx>(v.data(), static_cast<std::size_t>(v.size())));
}

bool equal_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v, double tol) {
  return max_deviation_up_to_global_phase(u, v) <= tol;
}

Eigen::MatrixXcd gate_matrix(const Gate& g, int d) {
  const auto ud = static_cast<Eigen::Index>(d);
  if (const auto* s = std::get_if<SumPow>(&g)) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ud * ud, ud * ud);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) m(a * d + mod(b + s->k * a, d), a * d + b) = 1.0;
    }
    return m;
  }
  if (const auto* x = std::get_if<DiagSingle>(&g)) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ud, ud);
    for (int v = 0; v < d; ++v) m(v, v) = std::polar(1.0, x->phases.at(static_cast<std::size_t>(v)));
    return m;
  }
  if (const auto* h = std::get_if<TwoLevelH>(&g)) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(ud, ud);
    const double r = 1.0 / std::sqrt(2.0);
    m(h->level_a, h->level_a) = r;
    m(h->level_b, h->level_a) = r;
    m(h->level_a, h->level_b) = r;
    m(h->level_b, h->level_b) = -r;
    return m;
  }
  if (const auto* x = std::get_if<XPow>(&g)) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ud, ud);
    for (int v = 0; v < d; ++v) m(mod(v + x->k, d), v) = 1.0;
    return m;
  }
  const auto& gp = std::get<GlobalPhase>(g);
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = std::polar(1.0, gp.angle);
  return m;
}

BasisImage track_basis(const Circuit& c, std::vector<int> digits) {
  const int d = c.d();
  if (static_cast<int>(digits.size()) != c.system().total()) {
    throw std::invalid_argument("track_basis: need one digit per qudit");
  }
  BasisImage image{std::move(digits), 0.0};
  auto& x = image.digits;
  for (const Gate& g : c.gates()) {
    if (const auto* s = std::get_if<SumPow>(&g)) {
      auto& t = x[static_cast<std::size_t>(s->target)];
      t = mod(t + s->k * x[static_cast<std::size_t>(s->control)], d);
    } else if (const auto* dg = std::get_if<DiagSingle>(&g)) {
      image.phase += dg->phases[static_cast<std::size_t>(x[static_cast<std::size_t>(dg->qudit)])];
    } else if (const auto* xp = std::get_if<XPow>(&g)) {
      auto& v = x[static_cast<std::size_t>(xp->qudit)];
      v = mod(v + xp->k, d);
    } else if (const auto* gp = std::get_if<GlobalPhase>(&g)) {
      image.phase += gp->angle;
    } else {
      throw std::invalid_argument("track_basis: TwoLevelH does not map basis states to basis states");
    }
  }
  return image;
}

}  // namespace qforge
