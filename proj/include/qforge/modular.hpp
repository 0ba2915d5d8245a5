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
#include <cstdint>
#include <span>
#include <vector>

namespace qforge {

/// d^n, throwing std::overflow_error when the result does not fit in 63 bits.
std::uint64_t checked_pow(int d, int n);

bool is_prime(int d);

/// Multiplicative inverse of a in Z_d. Requires gcd(a, d) = 1.
int mod_inverse(int a, int d);

inline int mod(long long a, int d) {
  const long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

/// Base-d digits of `index` over n positions, position 0 most significant.
/// This is the register order used everywhere: qudit 0 is the leading digit.
std::vector<int> to_digits(std::uint64_t index, int d, int n);
std::uint64_t from_digits(std::span<const int> digits, int d);

/// Throws std::invalid_argument naming `what` if d is not prime.
void require_prime(int d, const char* what);

}  // namespace qforge
