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

// Shared test fixtures: the worked m=4, b=3, t=2 example code.
#pragma once

#include <map>
#include <vector>

#include "spotty/code.hpp"
#include "spotty/matrix_file.hpp"
#include "spotty/weight.hpp"

namespace spotty::testing {

inline constexpr const char* kExampleMatrix = R"(# m=4 worked example, two bytes of three symbols
m=4 b=3 t=2
1 0 0     u+u2 0  0
0 u 0     u2   0  u3
0 0 u2    0    u3 0
)";

inline GeneratorMatrix example_matrix() { return parse_matrix(kExampleMatrix); }

// (alpha_0, alpha_1, alpha_2, alpha_3) -> number of codewords
inline const std::map<std::vector<unsigned>, Count>& example_table() {
  static const std::map<std::vector<unsigned>, Count> table = {
      {{2, 0, 0, 0}, 1},  {{0, 2, 0, 0}, 18}, {{0, 0, 2, 0}, 88}, {{0, 0, 0, 2}, 104}, {{1, 1, 0, 0}, 3},
      {{1, 0, 1, 0}, 7},  {{1, 0, 0, 1}, 5},  {{0, 1, 1, 0}, 72}, {{0, 1, 0, 1}, 58},  {{0, 0, 1, 1}, 156},
  };
  return table;
}

inline DistributionTable example_distribution() {
  DistributionTable d(ByteLayout(3, 2, 2));
  for (const auto& [alpha, count] : example_table()) d.add(AlphaVector(alpha), count);
  return d;
}

}  // namespace spotty::testing
