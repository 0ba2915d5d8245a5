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

#include <gtest/gtest.h>

#include <set>

#include "qforge/modular.hpp"

using namespace qforge;

namespace {

std::vector<std::string> words(int d, int n) {
  std::vector<std::string> out;
  for (const Codeword& w : gray_sequence(d, n)) out.push_back(to_string(w));
  return out;
}

}  // namespace

TEST(graycode, ruler_examples) {
  EXPECT_EQ(ruler(3, 1), 0);
  EXPECT_EQ(ruler(3, 3), 1);
  EXPECT_EQ(ruler(3, 9), 2);
  EXPECT_EQ(ruler(3, 18), 2);
  EXPECT_EQ(ruler(2, 4), 2);
  EXPECT_EQ(ruler(2, 6), 1);
  EXPECT_THROW(ruler(3, 0), std::invalid_argument);
  EXPECT_THROW(ruler(1, 4), std::invalid_argument);
}

TEST(graycode, ternary_two_digit_sequence) {
  EXPECT_EQ(words(3, 2), (std::vector<std::string>{"00", "01", "02", "12", "10", "11", "21", "22", "20"}));
}

TEST(graycode, small_binary_sequences) {
  EXPECT_EQ(words(2, 2), (std::vector<std::string>{"00", "01", "11", "10"}));
  EXPECT_EQ(words(2, 1), (std::vector<std::string>{"0", "1"}));
}

TEST(graycode, sequence_properties_exhaustive) {
  for (int d : {2, 3, 5, 7}) {
    for (int n = 1; checked_pow(d, n) <= 2187; ++n) {
      const auto seq = gray_sequence(d, n);
      ASSERT_EQ(seq.size(), checked_pow(d, n));
      std::set<Codeword> seen(seq.begin(), seq.end());
      EXPECT_EQ(seen.size(), seq.size());
      EXPECT_EQ(seq.front(), Codeword(static_cast<std::size_t>(n), 0));
      for (std::size_t b = 1; b <= seq.size(); ++b) {
        const Codeword& prev = seq[b - 1];
        const Codeword& next = b < seq.size() ? seq[b] : seq.front();
        const int k = b < seq.size() ? ruler(d, b) : closing_digit(d, n);
        int changed = 0;
        for (int i = 0; i < n; ++i) {
          const auto ui = static_cast<std::size_t>(i);
          if (prev[ui] != next[ui]) {
            ++changed;
            EXPECT_EQ(i, k);
            EXPECT_EQ(next[ui], (prev[ui] + 1) % d);
          }
        }
        EXPECT_EQ(changed, 1) << "d=" << d << " n=" << n << " b=" << b;
      }
    }
  }
}

TEST(graycode, cap_is_enforced) {
  EXPECT_THROW(gray_sequence(3, 4, 80), std::length_error);
  EXPECT_NO_THROW(gray_sequence(3, 4, 81));
}

TEST(graycode, parallel_digit_rotation) {
  for (std::uint64_t b = 1; b < 27; ++b) EXPECT_EQ(parallel_digit(3, 3, 0, b), ruler(3, b) % 3);
  std::set<int> firsts;
  for (int a = 0; a < 4; ++a) firsts.insert(parallel_digit(3, 4, a, 1));
  EXPECT_EQ(firsts, (std::set<int>{0, 1, 2, 3}));
  for (std::uint64_t b = 1; b < 81; ++b) {
    std::set<int> digits;
    for (int a = 0; a < 4; ++a) digits.insert(parallel_digit(3, 4, a, b));
    EXPECT_EQ(digits.size(), 4u);
  }
}

TEST(graycode, rotated_walks_enumerate_everything) {
  for (int a = 0; a < 3; ++a) {
    Codeword w(3, 0);
    std::set<Codeword> seen{w};
    for (std::uint64_t b = 1; b < 27; ++b) {
      auto& digit = w[static_cast<std::size_t>(parallel_digit(3, 3, a, b))];
      digit = (digit + 1) % 3;
      seen.insert(w);
    }
    EXPECT_EQ(seen.size(), 27u);
  }
}
