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

// MacWilliams identity for m-spotty weight enumerators over F2[u]/<u^m>.
//
// For a byte of Hamming weight j the per-byte kernel is
//
//   F_j(z) = sum_{j1=0}^{j} sum_{j2=0}^{b-j}
//              (-1)^{j1} (2^m - 1)^{j2} C(j, j1) C(b-j, j2) z^{ceil((j1+j2)/t)}
//
// and the dual enumerator is
//
//   W_dual(z) = (1/|C|) sum_alpha A_alpha prod_j F_j(z)^{alpha_j}.

#pragma once

#include <cstdint>

#include "spotty/polynomial.hpp"
#include "spotty/weight.hpp"

namespace spotty {

// F_j^{(b,m)}(z) for spotty parameter t. Throws ParameterError unless
// 0 <= j <= b, 1 <= t <= b and 1 <= m <= 16.
Polynomial f_poly(unsigned j, unsigned b, unsigned m, unsigned t);

// W(z) = sum_alpha A_alpha z^{sum_j ceil(j/t) alpha_j}.
Polynomial enumerator_from_distribution(const DistributionTable& dist, unsigned t);
inline Polynomial enumerator_from_distribution(const DistributionTable& dist) {
  return enumerator_from_distribution(dist, dist.layout().t());
}

// Dual enumerator from the distribution of a code of size code_size over
// R = F2[u]/<u^m>. The full numerator is formed first and divided once;
// a non-divisible or negative coefficient raises IntegrityError. A
// code_size that disagrees with the table total raises ParameterError.
Polynomial transform(const DistributionTable& dist, std::uint64_t code_size, unsigned m, unsigned t,
                     unsigned workers = 1);
inline Polynomial transform(const DistributionTable& dist, std::uint64_t code_size, unsigned m) {
  return transform(dist, code_size, m, dist.layout().t());
}

}  // namespace spotty
