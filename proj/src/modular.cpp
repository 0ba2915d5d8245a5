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

#include "qforge/modular.hpp"

#include <limits>
#include <utility>
#include <stdexcept>
#include <string>

namespace qforge {

std::uint64_t checked_pow(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("checked_pow: need d >= 1 and n >= 0");
  std::uint64_t r = 1;
  constexpr std::uint64_t limit = std::numeric_limits<std::int64_t>::max();
  for (int i = 0; i < n; ++i) {
    if (r > limit / static_cast<std::uint64_t>(d)) {
      throw std::overflow_error("d^n overflows: d=" + std::to_string(d) + " n=" + std::to_string(n));
    }
    r *= static_cast<std::uint64_t>(d);
  }
  return r;
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) return false;
  }
  return true;
}

int mod_inverse(int a, int d) {
  // extended Euclid
  long long t = 0, new_t = 1;
  long long r = d, new_r = mod(a, d);
  while (new_r != 0) {
    const long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) {
    throw std::invalid_argument(std::to_string(a) + " has no inverse modulo " + std::to_string(d));
  }
  return mod(t, d);
}

std::vector<int> to_digits(std::uint64_t index, int d, int n) {
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(d));
    index /= static_cast<std::uint64_t>(d);
  }
  return digits;
}

std::uint64_t from_digits(std::span<const int> digits, int d) {
  std::uint64_t v = 0;
  for (int x : digits) v = v * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(x);
  return v;
}

void require_prime(int d, const char* what) {
  if (!is_prime(d)) {
    throw std::invalid_argument(std::string(what) + ": level count d=" + std::to_string(d) +
                                " is not prime; the gadget transform needs inverses in F_d");
  }
}

}  // namespace qforge
