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

// Per-gate amplitude updates shared by the serial and OpenMP kernels. The
// `Loop` parameter decides how the independent index blocks are walked.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qforge/kernels.hpp"

namespace qforge::kernels::detail {

inline std::size_t ipow(int d, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(d);
  return r;
}

/// Stride of qudit q's digit in the flat index.
inline std::size_t stride_of(int d, int n, int q) { return ipow(d, n - 1 - q); }

/// Spreads b so that the digit at `stride` is zero.
inline std::size_t insert_zero(std::size_t b, std::size_t stride, int d) {
  return (b / stride) * stride * static_cast<std::size_t>(d) + b % stride;
}

inline void check_shape(std::size_t size, int d, int n) {
  if (d < 2 || d > kMaxLevels) throw std::invalid_argument("kernel: level count outside [2, 64]");
  if (size != ipow(d, n)) throw std::invalid_argument("kernel: amplitude count is not d^n");
}

template <class Loop>
void apply_gate(std::span<cplx> amps, int d, int n, const Gate& g, Loop&& loop) {
  check_shape(amps.size(), d, n);
  cplx* a = amps.data();
  const std::size_t dim = amps.size();
  const auto ud = static_cast<std::size_t>(d);

  if (const auto* s = std::get_if<SumPow>(&g)) {
    const std::size_t sc = stride_of(d, n, s->control);
    const std::size_t st = stride_of(d, n, s->target);
    const std::size_t lo = std::min(sc, st), hi = std::max(sc, st);
    const int k = s->k;
    loop(dim / (ud * ud), [=](std::size_t b) {
      const std::size_t base = insert_zero(insert_zero(b, lo, d), hi, d);
      std::array<cplx, kMaxLevels> buf;
      for (int c = 1; c < d; ++c) {
        const int shift = (k * c) % d;
        cplx* row = a + base + static_cast<std::size_t>(c) * sc;
        for (int t = 0; t < d; ++t) buf[static_cast<std::size_t>((t + shift) % d)] = row[static_cast<std::size_t>(t) * st];
        for (int t = 0; t < d; ++t) row[static_cast<std::size_t>(t) * st] = buf[static_cast<std::size_t>(t)];
      }
    });
  } else if (const auto* x = std::get_if<DiagSingle>(&g)) {
    const std::size_t stride = stride_of(d, n, x->qudit);
    std::array<cplx, kMaxLevels> factor;
    for (int v = 0; v < d; ++v) factor[static_cast<std::size_t>(v)] = std::polar(1.0, x->phases[static_cast<std::size_t>(v)]);
    loop(dim, [=](std::size_t i) { a[i] *= factor[(i / stride) % ud]; });
  } else if (const auto* h = std::get_if<TwoLevelH>(&g)) {
    const std::size_t stride = stride_of(d, n, h->qudit);
    const std::size_t oa = static_cast<std::size_t>(h->level_a) * stride;
    const std::size_t ob = static_cast<std::size_t>(h->level_b) * stride;
    const double r = 1.0 / std::sqrt(2.0);
    loop(dim / ud, [=](std::size_t b) {
      const std::size_t base = insert_zero(b, stride, d);
      const cplx u = a[base + oa], v = a[base + ob];
      a[base + oa] = r * (u + v);
      a[base + ob] = r * (u - v);
    });
  } else if (const auto* xp = std::get_if<XPow>(&g)) {
    const std::size_t stride = stride_of(d, n, xp->qudit);
    const int k = xp->k;
    loop(dim / ud, [=](std::size_t b) {
      const std::size_t base = insert_zero(b, stride, d);
      std::array<cplx, kMaxLevels> buf;
      for (int v = 0; v < d; ++v) buf[static_cast<std::size_t>((v + k) % d)] = a[base + static_cast<std::size_t>(v) * stride];
      for (int v = 0; v < d; ++v) a[base + static_cast<std::size_t>(v) * stride] = buf[static_cast<std::size_t>(v)];
    });
  } else if (const auto* gp = std::get_if<GlobalPhase>(&g)) {
    const cplx f = std::polar(1.0, gp->angle);
    loop(dim, [=](std::size_t i) { a[i] *= f; });
  }
}

/// Row-major (d^n - 1) x n digit table of s_i = digits(i + 1).
inline std::vector<std::uint8_t> gadget_strings(int d, int n) {
  const std::size_t count = ipow(d, n) - 1;
  std::vector<std::uint8_t> table(count * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t v = i + 1;
    for (int q = n - 1; q >= 0; --q) {
      table[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(q)] = static_cast<std::uint8_t>(v % static_cast<std::size_t>(d));
      v /= static_cast<std::size_t>(d);
    }
  }
  return table;
}

inline int inner_mod(const std::uint8_t* s, const std::uint8_t* t, int n, int d) {
  int acc = 0;
  for (int q = 0; q < n; ++q) acc += s[q] * t[q];
  return acc % d;
}

template <class Loop>
void beta_to_alpha(std::span<const double> beta, int d, int n, std::span<double> alpha, Loop&& loop) {
  const std::size_t count = ipow(d, n) - 1;
  if (beta.size() != count || alpha.size() != count) throw std::invalid_argument("transform: length must be d^n - 1");
  const auto table = gadget_strings(d, n);
  const double scale = 1.0 / static_cast<double>(ipow(d, n - 1));
  const std::uint8_t* s = table.data();
  const auto un = static_cast<std::size_t>(n);
  loop(count, [&, s](std::size_t i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      const int t = inner_mod(s + i * un, s + j * un, n, d);
      if (t == 1) acc += beta[j];
      else if (t == 0) acc -= beta[j];
    }
    alpha[i] = acc * scale;
  });
}

template <class Loop>
void alpha_to_beta(std::span<const double> alpha, int d, int n, std::span<double> beta, Loop&& loop) {
  const std::size_t count = ipow(d, n) - 1;
  if (beta.size() != count || alpha.size() != count) throw std::invalid_argument("transform: length must be d^n - 1");
  const auto table = gadget_strings(d, n);
  const std::uint8_t* s = table.data();
  const auto un = static_cast<std::size_t>(n);
  loop(count, [&, s](std::size_t i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      if (inner_mod(s + i * un, s + j * un, n, d) == 1) acc += alpha[j];
    }
    beta[i] = acc;
  });
}

}  // namespace qforge::kernels::detail
