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

// Brute-force ground truth for the character-sum identities behind the
// MacWilliams transform, and a transform-free dual enumerator.
//
// The Oracle evaluates chi through its own lookup table, built once from
// the closed form, so a single entry can be flipped to check that the
// verification campaign actually notices a broken character.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spotty/code.hpp"
#include "spotty/polynomial.hpp"

namespace spotty {

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

// One checked instance: pass iff expected == actual, both exact.
// Informational reports are printed but do not count towards a verdict.
struct LemmaReport {
  std::string lemma;
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool informational = false;
  std::string note;
};

// True iff every non-informational report passed.
bool all_pass(std::span<const LemmaReport> reports) noexcept;

class Oracle {
 public:
  // budget caps the number of vectors any single brute-force sum may visit.
  explicit Oracle(Ring ring, std::uint64_t budget = kDefaultOracleBudget);

  // A copy whose character table has chi(x) negated.
  Oracle with_flipped_character(RingElement x) const;

  const Ring& ring() const noexcept { return ring_; }
  int chi(RingElement x) const { return chi_[x.bits()]; }

  // sum_{a in <u^k>} chi(a), 0 <= k < m.
  std::int64_t sum_chi_over_ideal(unsigned k) const;
  // sum_{r in R} chi(a r)
  std::int64_t sum_chi_multiples(RingElement a) const;

  // For a byte c and index set I: subsets must lie in supp(c).
  //
  // Sum over every v with supp(v) contained in I (the factorizing reading;
  // coordinates in I range over all of R). I must be non-empty.
  std::int64_t sum_chi_subspace(std::span<const RingElement> c, std::span<const std::size_t> indices) const;
  // Sum over v with supp(v) == I exactly. I = {} gives 1.
  std::int64_t sum_chi_fixed_support(std::span<const RingElement> c,
                                     std::span<const std::size_t> indices) const;
  // Sum over v with supp(v) inside supp(c) and w(v) <= k (the literal
  // partial-sum reading).
  std::int64_t sum_chi_partial_weight(std::span<const RingElement> c, unsigned k) const;

  // Sums over S_k(c), the complement-side set, and S_{j1,j2}(c).
  std::int64_t sum_chi_Sk(std::span<const RingElement> c, unsigned k) const;
  std::int64_t sum_chi_Sbar(std::span<const RingElement> c, unsigned k) const;
  std::int64_t sum_chi_Sj1j2(std::span<const RingElement> c, unsigned j1, unsigned j2) const;

  // sum_{v in R^b} chi(<c, v>) z^{ceil(w_H(v)/t)}
  Polynomial byte_transform_bruteforce(std::span<const RingElement> c, unsigned t) const;

 private:
  template <class Visit>
  void for_each_vector(std::size_t length, bool nonzero_only, Visit&& visit) const;
  std::uint32_t dot(std::span<const RingElement> c, std::span<const std::uint32_t> v) const noexcept;

  Ring ring_;
  std::uint64_t budget_;
  std::vector<int> chi_;
};

// Enumerator of the dual of span(g) by exhaustive scan, no transform
// involved.
Polynomial dual_enumerator_bruteforce(const GeneratorMatrix& g, std::uint64_t budget = std::uint64_t{1} << 28,
                                      unsigned workers = 1);

// sum_{v in C_dual} z^{w_M(v)} against (1/|C|) sum_{c in C} f^(c), with f^
// factored into per-byte brute-force transforms.
LemmaReport poisson_check(const LinearCode& code, unsigned t, std::uint64_t budget = std::uint64_t{1} << 28,
                          unsigned workers = 1);

// Checks the A/B partition axioms for the candidate set A: 0 and 1 in A,
// |A| = |R|/2, A takes half of the zero divisors (0 included), half of
// every non-zero ideal and half of the units, and A+A, B+B lie in A while
// A+B lies in B.
bool partition_axioms_hold(const Ring& ring, std::span<const RingElement> a);

struct PartitionSearch {
  std::size_t count = 0;
  std::vector<std::vector<RingElement>> solutions;
};

// Exhaustive search over subsets A of size 2^{m-1} containing 0 and 1.
// Only m <= 4 is searched; larger m raises ResourceError.
PartitionSearch partition_uniqueness_search(unsigned m);

struct CampaignGrid {
  std::vector<unsigned> ms{2, 3, 4};
  std::vector<unsigned> bs{1, 2, 3};
  // Bytes are enumerated exhaustively when b*m <= this many bits...
  unsigned exhaustive_bits = 8;
  // ...and otherwise sampled, stratified by byte weight.
  std::size_t samples = 100;
  // Random codes per (m, b, t) cell for the Poisson-summation check; only
  // cells whose two-byte ambient space has at most 2^12 vectors.
  std::size_t poisson_codes = 1;
};

// Every lemma instance over the grid, in a fixed order that does not
// depend on the worker count. fault, when set, negates chi at that
// coefficient vector in every ring large enough to contain it.
std::vector<LemmaReport> run_campaign(const CampaignGrid& grid, std::uint64_t seed, unsigned workers = 1,
                                      std::optional<std::uint32_t> fault = std::nullopt);

}  // namespace spotty
