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

#include <cstdint>
#include <string>
#include <vector>

namespace qforge {

/// Codeword of a d-ary Gray code. Index k is the k-th digit counted from
/// the right, so digit 0 is the one that changes most often.
using Codeword = std::vector<int>;

inline constexpr std::uint64_t kDefaultGrayCap = std::uint64_t{1} << 22;

/// Digit changed when moving from codeword b-1 to codeword b: the largest k
/// with d^k dividing b. Throws std::invalid_argument for b < 1 or d < 2.
int ruler(int d, std::uint64_t b);

/// All d^n codewords, starting at 0^n; codeword b is codeword b-1 with digit
/// ruler(d, b) incremented mod d. Throws std::length_error past `cap`.
std::vector<Codeword> gray_sequence(int d, int n, std::uint64_t cap = kDefaultGrayCap);

/// Digit that closes the cycle: incrementing it in the last codeword gives
/// 0^n again. This is ruler(d, d^n) folded onto the top digit, n - 1.
int closing_digit(int d, int n);

/// Rotated schedule for target group `a`: (ruler(d, b) + a) mod n_digits.
/// Distinct groups a, a' < n_digits touch distinct digits at every step.
int parallel_digit(int d, int n_digits, int a, std::uint64_t b);

/// Digits printed most significant first, e.g. "12".
std::string to_string(const Codeword& w);

}  // namespace qforge
