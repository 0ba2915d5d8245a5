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

#include "qforge/diagonal_synth.hpp"

#include <algorithm>
#include <stdexcept>

#include "qforge/graycode.hpp"
#include "qforge/modular.hpp"
#include "synth_detail.hpp"

namespace qforge {

std::vector<double> direction_phases(const AlphaVector& alpha, std::span<const int> s) {
  const int d = alpha.d;
  std::vector<double> phases(static_cast<std::size_t>(d), 0.0);
  std::vector<int> scaled(s.size());
  for (int y = 1; y < d; ++y) {
    const int c = mod_inverse(y, d);
    for (std::size_t q = 0; q < s.size(); ++q) scaled[q] = (c * s[q]) % d;
    phases[static_cast<std::size_t>(y)] = alpha.angles[AlphaVector::index_of(scaled, d)];
  }
  return phases;
}

namespace detail {

void emit_gray_walks(const AlphaVector& alpha, Circuit& out) {
  const int d = alpha.d;
  const int n = alpha.n;
  std::vector<int> s(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    std::fill(s.begin(), s.end(), 0);
    s[static_cast<std::size_t>(p)] = 1;
    out.append(DiagSingle{p, direction_phases(alpha, s)});
    if (p == 0) continue;
    const std::uint64_t words = checked_pow(d, p);
    for (std::uint64_t b = 1; b < words; ++b) {
      const int q = p - 1 - ruler(d, b);
      out.append(SumPow{q, p, 1});
      s[static_cast<std::size_t>(q)] = (s[static_cast<std::size_t>(q)] + 1) % d;
      out.append(DiagSingle{p, direction_phases(alpha, s)});
    }
    // The last codeword has d-1 on the top digit only; one more step clears it.
    out.append(SumPow{p - 1 - closing_digit(d, p), p, 1});
  }
}

}  // namespace detail

Circuit synth_from_alpha(const AlphaVector& alpha, double global_phase) {
  require_prime(alpha.d, "synth_from_alpha");
  if (alpha.angles.size() != checked_pow(alpha.d, alpha.n) - 1) {
    throw std::invalid_argument("synth_from_alpha: expected d^n - 1 angles");
  }
  Circuit out(QuditSystem{alpha.d, alpha.n, 0});
  if (global_phase != 0.0) out.append(GlobalPhase{global_phase});
  detail::emit_gray_walks(alpha, out);
  return out;
}

Circuit synth_sequential(const DiagonalSpec& spec, TransformMethod method) {
  spec.check();
  require_prime(spec.d, "synth_sequential");
  DiagonalSpec relative = spec;
  for (double& b : relative.beta) b -= spec.beta[0];
  return synth_from_alpha(transform_beta_to_alpha(relative, method), spec.beta[0]);
}

Circuit synth_gadgets(std::span<const PhaseGadget> gadgets, int d, int n) {
  const GadgetSum sum = accumulate_gadgets(gadgets, d, n);
  return synth_from_alpha(sum.alpha, sum.global_phase);
}

}  // namespace qforge
