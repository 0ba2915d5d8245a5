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

#include "qforge/phase_gadget.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qforge/kernels.hpp"
#include "qforge/modular.hpp"

namespace qforge {

namespace {

constexpr std::uint64_t kNaiveLimit = 729;

void check_string(std::span<const int> s, int d, int n) {
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("gadget string length must equal n");
  bool nonzero = false;
  for (int v : s) {
    if (v < 0 || v >= d) throw std::invalid_argument("gadget string digit outside [d]");
    nonzero = nonzero || v != 0;
  }
  if (!nonzero) throw std::invalid_argument("gadget string must be nonzero");
}

// F(k) = sum_x f(x) w^{<k, x>}, w = e^{2 pi i / d}, one length-d DFT per axis.
std::vector<std::complex<double>> character_transform(std::vector<std::complex<double>> f, int d, int n) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) w[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
  const std::size_t dim = f.size();
  const auto ud = static_cast<std::size_t>(d);
  std::vector<std::complex<double>> fiber(ud);
  std::size_t stride = 1;
  for (int axis = 0; axis < n; ++axis, stride *= ud) {
    for (std::size_t b = 0; b < dim / ud; ++b) {
      const std::size_t base = (b / stride) * stride * ud + b % stride;
      for (std::size_t k = 0; k < ud; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t x = 0; x < ud; ++x) acc += f[base + x * stride] * w[(k * x) % ud];
        fiber[k] = acc;
      }
      for (std::size_t k = 0; k < ud; ++k) f[base + k * stride] = fiber[k];
    }
  }
  return f;
}

// Flat index of c*s (mod d, digitwise) for the string at flat index `s_index`.
std::size_t scaled_index(std::size_t s_index, int c, int d, int n) {
  const auto ud = static_cast<std::size_t>(d);
  std::size_t out = 0, place = 1;
  for (int q = 0; q < n; ++q, place *= ud) {
    const auto digit = static_cast<int>((s_index / place) % ud);
    out += static_cast<std::size_t>((digit * c) % d) * place;
  }
  return out;
}

std::vector<double> beta_to_alpha_fast(std::span<const double> beta_plus, int d, int n) {
  const std::size_t dim = beta_plus.size() + 1;
  std::vector<std::complex<double>> f(dim, 0.0);
  for (std::size_t j = 1; j < dim; ++j) f[j] = beta_plus[j - 1];
  const auto big_f = character_transform(std::move(f), d, n);
  std::vector<std::complex<double>> coeff(static_cast<std::size_t>(d));
  for (int c = 1; c < d; ++c) coeff[static_cast<std::size_t>(c)] = std::polar(1.0, -2.0 * std::numbers::pi * c / d) - 1.0;
  const double scale = 1.0 / static_cast<double>(dim);
  std::vector<double> alpha(dim - 1);
  for (std::size_t s = 1; s < dim; ++s) {
    std::complex<double> acc = 0.0;
    for (int c = 1; c < d; ++c) acc += coeff[static_cast<std::size_t>(c)] * big_f[scaled_index(s, c, d, n)];
    alpha[s - 1] = acc.real() * scale;
  }
  return alpha;
}

std::vector<double> alpha_to_beta_fast(std::span<const double> alpha, int d, int n) {
  const std::size_t dim = alpha.size() + 1;
  std::vector<std::complex<double>> f(dim, 0.0);
  for (std::size_t j = 1; j < dim; ++j) f[j] = alpha[j - 1];
  const auto big_f = character_transform(std::move(f), d, n);
  const double scale = 1.0 / d;
  std::vector<double> beta(dim - 1);
  for (std::size_t x = 1; x < dim; ++x) {
    std::complex<double> acc = 0.0;
    for (int c = 0; c < d; ++c) acc += std::polar(1.0, -2.0 * std::numbers::pi * c / d) * big_f[scaled_index(x, c, d, n)];
    beta[x - 1] = acc.real() * scale;
  }
  return beta;
}

bool use_naive(TransformMethod method, std::uint64_t dim) {
  return method == TransformMethod::naive || (method == TransformMethod::automatic && dim <= kNaiveLimit);
}

}  // namespace

std::uint64_t DiagonalSpec::dimension() const { return checked_pow(d, n); }

void DiagonalSpec::check() const {
  if (d < 2) throw std::invalid_argument("DiagonalSpec: d must be >= 2");
  if (n < 1) throw std::invalid_argument("DiagonalSpec: n must be >= 1");
  if (beta.size() != dimension()) {
    throw std::invalid_argument("DiagonalSpec: beta has " + std::to_string(beta.size()) + " entries, expected d^n = " +
                                std::to_string(dimension()));
  }
  for (double b : beta) {
    if (!std::isfinite(b)) throw std::invalid_argument("DiagonalSpec: non-finite phase");
  }
}

std::vector<int> AlphaVector::string_at(std::size_t j) const { return to_digits(j + 1, d, n); }

std::size_t AlphaVector::index_of(std::span<const int> s, int d) {
  const std::uint64_t v = from_digits(s, d);
  if (v == 0) throw std::invalid_argument("AlphaVector::index_of: zero string has no gadget");
  return static_cast<std::size_t>(v - 1);
}

int inner_prod_mod_d(std::span<const int> s1, std::span<const int> s2, int d) {
  if (s1.size() != s2.size()) throw std::invalid_argument("inner_prod_mod_d: length mismatch");
  long long acc = 0;
  for (std::size_t i = 0; i < s1.size(); ++i) acc += static_cast<long long>(s1[i]) * s2[i];
  return mod(acc, d);
}

AlphaVector transform_beta_to_alpha(const DiagonalSpec& spec, TransformMethod method) {
  spec.check();
  require_prime(spec.d, "transform_beta_to_alpha");
  const std::uint64_t dim = spec.dimension();
  std::span<const double> beta_plus(spec.beta.data() + 1, static_cast<std::size_t>(dim - 1));
  AlphaVector out{spec.d, spec.n, {}};
  if (use_naive(method, dim)) {
    out.angles.resize(static_cast<std::size_t>(dim - 1));
    kernels::omp::beta_to_alpha_naive(beta_plus, spec.d, spec.n, out.angles);
  } else {
    out.angles = beta_to_alpha_fast(beta_plus, spec.d, spec.n);
  }
  return out;
}

DiagonalSpec transform_alpha_to_beta(const AlphaVector& alpha, TransformMethod method) {
  require_prime(alpha.d, "transform_alpha_to_beta");
  const std::uint64_t dim = checked_pow(alpha.d, alpha.n);
  if (alpha.angles.size() != dim - 1) throw std::invalid_argument("AlphaVector: expected d^n - 1 angles");
  DiagonalSpec out{alpha.d, alpha.n, std::vector<double>(static_cast<std::size_t>(dim), 0.0)};
  std::span<double> beta_plus(out.beta.data() + 1, static_cast<std::size_t>(dim - 1));
  if (use_naive(method, dim)) {
    kernels::omp::alpha_to_beta_naive(alpha.angles, alpha.d, alpha.n, beta_plus);
  } else {
    const auto b = alpha_to_beta_fast(alpha.angles, alpha.d, alpha.n);
    std::copy(b.begin(), b.end(), beta_plus.begin());
  }
  return out;
}

Eigen::MatrixXd gadget_matrix_a(int d, int n) {
  const auto count = static_cast<Eigen::Index>(checked_pow(d, n) - 1);
  Eigen::MatrixXd a(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const auto si = to_digits(static_cast<std::uint64_t>(i) + 1, d, n);
    for (Eigen::Index j = 0; j < count; ++j) {
      const auto sj = to_digits(static_cast<std::uint64_t>(j) + 1, d, n);
      a(i, j) = inner_prod_mod_d(si, sj, d) == 1 ? 1.0 : 0.0;
    }
  }
  return a;
}

Eigen::MatrixXd gadget_matrix_b(int d, int n) {
  const auto count = static_cast<Eigen::Index>(checked_pow(d, n) - 1);
  const double scale = 1.0 / static_cast<double>(checked_pow(d, n - 1));
  Eigen::MatrixXd b(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const auto si = to_digits(static_cast<std::uint64_t>(i) + 1, d, n);
    for (Eigen::Index j = 0; j < count; ++j) {
      const auto sj = to_digits(static_cast<std::uint64_t>(j) + 1, d, n);
      const int t = inner_prod_mod_d(si, sj, d);
      b(i, j) = t == 1 ? scale : (t == 0 ? -scale : 0.0);
    }
  }
  return b;
}

NormalizedGadgets normalize_gadget(const PhaseGadget& p, int d) {
  require_prime(d, "normalize_gadget");
  check_string(p.s, d, static_cast<int>(p.s.size()));
  if (p.t < 0 || p.t >= d) throw std::invalid_argument("normalize_gadget: t outside [d]");
  auto scaled = [&](int c) {
    std::vector<int> s(p.s.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = mod(static_cast<long long>(c) * p.s[i], d);
    return s;
  };
  NormalizedGadgets out;
  if (p.t != 0) {
    out.gadgets.push_back({p.alpha, scaled(mod_inverse(p.t, d)), 1});
    return out;
  }
  out.global_phase = p.alpha;
  for (int j = 1; j < d; ++j) out.gadgets.push_back({-p.alpha, scaled(j), 1});
  return out;
}

GadgetSum accumulate_gadgets(std::span<const PhaseGadget> gadgets, int d, int n) {
  require_prime(d, "accumulate_gadgets");
  const std::uint64_t dim = checked_pow(d, n);
  GadgetSum sum{AlphaVector{d, n, std::vector<double>(static_cast<std::size_t>(dim - 1), 0.0)}, 0.0};
  for (const PhaseGadget& p : gadgets) {
    check_string(p.s, d, n);
    const auto normalized = normalize_gadget(p, d);
    sum.global_phase += normalized.global_phase;
    for (const PhaseGadget& g : normalized.gadgets) sum.alpha.angles[AlphaVector::index_of(g.s, d)] += g.alpha;
  }
  return sum;
}

std::vector<double> gadget_phases(const PhaseGadget& p, int d, int n) {
  if (static_cast<int>(p.s.size()) != n) throw std::invalid_argument("gadget_phases: string length must equal n");
  const std::uint64_t dim = checked_pow(d, n);
  std::vector<double> phases(static_cast<std::size_t>(dim), 0.0);
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (inner_prod_mod_d(to_digits(x, d, n), p.s, d) == p.t) phases[static_cast<std::size_t>(x)] = p.alpha;
  }
  return phases;
}

}  // namespace qforge
