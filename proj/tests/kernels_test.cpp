/*
   Copyright 2026 The spotty Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "spotty/kernels.hpp"

namespace spotty {
namespace {

GeneratorMatrix random_matrix(std::mt19937_64& rng, unsigned m, unsigned b, unsigned t, unsigned n, unsigned k) {
  const Ring r(m);
  const ByteLayout layout(b, t, n);
  std::uniform_int_distribution<std::uint32_t> pick(0, r.mask());
  std::vector<std::vector<RingElement>> rows(k);
  for (auto& row : rows) {
    for (std::size_t j = 0; j < layout.length(); ++j) row.push_back(r.element(pick(rng)));
  }
  return GeneratorMatrix(r, layout, rows);
}

TEST(KernelsTest, DecodeIndexIsLexicographic) {
  const Ring r(2);
  const auto v = kernels::decode_index(r, 3, 0b01'10'11);
  EXPECT_EQ(v, (std::vector{r.element(1), r.element(2), r.element(3)}));
}

TEST(KernelsTest, SpanSerialMatchesOmp) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    // m = 5 with 13 coordinates spills into a second lane.
    const unsigned m = 1 + trial % 5;
    const unsigned n = trial % 7 == 0 ? 13 : 1 + trial % 4;
    const auto g = random_matrix(rng, m, 1, 1, n, 1 + trial % 2);
    const auto serial = kernels::span_serial(g);
    for (unsigned workers : {1u, 3u, 8u}) ASSERT_EQ(kernels::span_omp(g, workers), serial) << "trial " << trial;
  }
}

TEST(KernelsTest, DualMembersSerialMatchesOmp) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned m = 1 + trial % 3;
    const auto g = random_matrix(rng, m, 2, 1, 1 + trial % 3, trial % 4);
    const auto serial = kernels::dual_members_serial(g);
    for (unsigned workers : {1u, 2u, 5u}) ASSERT_EQ(kernels::dual_members_omp(g, workers), serial);
  }
}

TEST(KernelsTest, DualMembersManyRowsUseSeveralLanes) {
  // 30 rows of m = 4 need two 64-bit lanes per table entry.
  std::mt19937_64 rng(23);
  const auto g = random_matrix(rng, 4, 1, 1, 3, 30);
  EXPECT_EQ(kernels::dual_members_omp(g, 2), kernels::dual_members_serial(g));
}

TEST(KernelsTest, DualTallySerialMatchesOmp) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned b = 1 + trial % 3;
    const auto g = random_matrix(rng, 2, b, 1 + trial % b, 6 / b, 1 + trial % 2);
    const auto serial = kernels::dual_tally_serial(g);
    for (unsigned workers : {1u, 4u}) {
      const auto omp = kernels::dual_tally_omp(g, workers);
      EXPECT_EQ(omp.count, serial.count);
      EXPECT_EQ(omp.spotty_histogram, serial.spotty_histogram);
      EXPECT_EQ(omp.distribution, serial.distribution);
    }
  }
}

TEST(KernelsTest, DistributionSerialMatchesOmp) {
  const auto code = span(testing::example_matrix());
  const auto serial = kernels::distribution_serial(code);
  for (unsigned workers : {1u, 2u, 7u}) EXPECT_EQ(kernels::distribution_omp(code, workers), serial);
}

}  // namespace
}  // namespace spotty
