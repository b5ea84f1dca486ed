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

// Line-oriented generator-matrix files:
//
//   # comment
//   m=4 b=3 t=2
//   1 0 0   u+u2 0  0
//   0 u 0   u2   0  u3
//
// '#' starts a comment anywhere on a line. The header carries m, b and t
// (any order) and optionally n, the byte count; n is required to agree
// with the rows when both are present and defaults to 1 for a file with no
// rows. Each further non-empty line is one row of ring-element tokens; row
// lengths must be equal and a multiple of b.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "spotty/code.hpp"

namespace spotty {

// Throws ParseError carrying the 1-based line and column of the problem.
GeneratorMatrix parse_matrix(std::string_view text);
GeneratorMatrix load_matrix(const std::filesystem::path& path);

std::string format_matrix(const GeneratorMatrix& g);

}  // namespace spotty
