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

// Hamming and m-spotty weights, byte weight histograms (alpha-vectors),
// distribution tables and the directly enumerated m-spotty enumerator.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "spotty/code.hpp"
#include "spotty/polynomial.hpp"

namespace spotty {

using Count = std::uint64_t;

constexpr unsigned ceil_div(unsigned a, unsigned b) noexcept { return (a + b - 1) / b; }

unsigned hamming_weight(std::span<const RingElement> v) noexcept;

// {i : v_i != 0} and its complement in {0, ..., len-1}, ascending.
std::vector<std::size_t> support(std::span<const RingElement> v);
std::vector<std::size_t> complement_support(std::span<const RingElement> v);

// sum over bytes of ceil(w_H(byte) / t)
unsigned m_spotty_weight(std::span<const RingElement> coords, const ByteLayout& layout);
inline unsigned m_spotty_weight(const Word& w) { return m_spotty_weight(w.coords(), w.layout()); }

// sum over bytes of ceil(d_H(x_i, y_i) / t)
unsigned m_spotty_distance(const Word& x, const Word& y);

// (alpha_0, ..., alpha_b): alpha_j counts the bytes of Hamming weight j.
class AlphaVector {
 public:
  explicit AlphaVector(std::vector<unsigned> counts);

  unsigned b() const noexcept { return static_cast<unsigned>(counts_.size()) - 1; }
  unsigned operator[](std::size_t j) const { return counts_.at(j); }
  std::span<const unsigned> counts() const noexcept { return counts_; }
  // sum_j alpha_j, the byte count n
  unsigned bytes() const noexcept;
  // sum_j ceil(j/t) alpha_j
  unsigned spotty_weight(unsigned t) const;

  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
  friend auto operator<=>(const AlphaVector&, const AlphaVector&) = default;

 private:
  std::vector<unsigned> counts_;
};

AlphaVector alpha_vector(std::span<const RingElement> coords, const ByteLayout& layout);
inline AlphaVector alpha_vector(const Word& w) { return alpha_vector(w.coords(), w.layout()); }

// Codeword counts A_alpha keyed by alpha-vector.
class DistributionTable {
 public:
  explicit DistributionTable(ByteLayout layout) : layout_(layout) {}

  // Throws ParameterError if alpha has the wrong length or does not sum to n.
  void add(const AlphaVector& alpha, Count count = 1);
  void merge(const DistributionTable& other);

  const ByteLayout& layout() const noexcept { return layout_; }
  const std::map<AlphaVector, Count>& entries() const noexcept { return entries_; }
  Count count(const AlphaVector& alpha) const;
  Count total() const noexcept { return total_; }

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;

 private:
  ByteLayout layout_;
  std::map<AlphaVector, Count> entries_;
  Count total_ = 0;
};

DistributionTable distribution(const LinearCode& code, unsigned workers = 1);

// W(z) = sum_{c in C} z^{w_M(c)}, codeword by codeword.
Polynomial enumerator(const LinearCode& code);

}  // namespace spotty
