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

// Enumeration kernels behind span(), dual() and distribution().
//
// Each kernel has a plain serial reference written directly against the
// ring arithmetic, and an OpenMP version working on packed lookup tables.
// Both produce identical results for any worker count; tests hold them to
// that.

#pragma once

#include <cstdint>
#include <vector>

#include "spotty/code.hpp"
#include "spotty/weight.hpp"

namespace spotty::kernels {

// Summary of a dual scan without materializing the codewords.
struct DualTally {
  std::uint64_t count = 0;
  // spotty_histogram[w] = number of dual words of m-spotty weight w
  std::vector<std::uint64_t> spotty_histogram;
  DistributionTable distribution;

  explicit DualTally(ByteLayout layout) : distribution(layout) {}
};

// Index of a vector of R^N in the scan: coordinate 0 is the most
// significant base-2^m digit, so ascending index is lexicographic order.
std::vector<RingElement> decode_index(const Ring& ring, std::size_t length, std::uint64_t index);

// Sorted, deduplicated flat symbols of span(G). Needs |R|^k tuples.
std::vector<RingElement> span_serial(const GeneratorMatrix& g);
std::vector<RingElement> span_omp(const GeneratorMatrix& g, unsigned workers);

// Scan indices of all v in R^N orthogonal to every row, ascending.
std::vector<std::uint64_t> dual_members_serial(const GeneratorMatrix& g);
std::vector<std::uint64_t> dual_members_omp(const GeneratorMatrix& g, unsigned workers);

DualTally dual_tally_serial(const GeneratorMatrix& g);
DualTally dual_tally_omp(const GeneratorMatrix& g, unsigned workers);

DistributionTable distribution_serial(const LinearCode& code);
DistributionTable distribution_omp(const LinearCode& code, unsigned workers);

}  // namespace spotty::kernels
