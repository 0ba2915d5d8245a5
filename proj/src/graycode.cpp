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

#include "qforge/graycode.hpp"

#include <stdexcept>

#include "qforge/modular.hpp"

namespace qforge {

int ruler(int d, std::uint64_t b) {
  if (d < 2) throw std::invalid_argument("ruler: d must be >= 2");
  if (b < 1) throw std::invalid_argument("ruler: step index must be >= 1");
  int k = 0;
  const auto ud = static_cast<std::uint64_t>(d);
  while (b % ud == 0) {
    b /= ud;
    ++k;
  }
  return k;
}

std::vector<Codeword> gray_sequence(int d, int n, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("gray_sequence: n must be >= 1");
  const std::uint64_t count = checked_pow(d, n);
  if (count > cap) throw std::length_error("gray_sequence: d^n exceeds cap");
  std::vector<Codeword> out;
  out.reserve(static_cast<std::size_t>(count));
  Codeword w(static_cast<std::size_t>(n), 0);
  out.push_back(w);
  for (std::uint64_t b = 1; b < count; ++b) {
    auto& digit = w[static_cast<std::size_t>(ruler(d, b))];
    digit = (digit + 1) % d;
    out.push_back(w);
  }
  return out;
}

int closing_digit(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("closing_digit: need d >= 2, n >= 1");
  return n - 1;
}

int parallel_digit(int d, int n_digits, int a, std::uint64_t b) {
  if (n_digits < 1) throw std::invalid_argument("parallel_digit: n_digits must be >= 1");
  if (a < 0) throw std::invalid_argument("parallel_digit: negative group index");
  return (ruler(d, b) + a) % n_digits;
}

std::string to_string(const Codeword& w) {
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 10) {
      s.push_back(static_cast<char>('0' + *it));
    } else {
      s += "(" + std::to_string(*it) + ")";
    }
  }
  return s;
}

}  // namespace qforge
