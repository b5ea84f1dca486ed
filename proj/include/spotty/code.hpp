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

// Words over R organized into bytes, generator matrices, and explicitly
// enumerated linear codes.
//
// Coordinates and byte indices are 0-based: byte i of a word is
// coords[i*b, i*b + b).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spotty/ring.hpp"

namespace spotty {

inline constexpr std::uint64_t kDefaultSpanBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultDualBudget = std::uint64_t{1} << 28;

class ByteLayout {
 public:
  // b bits per byte, spotty parameter t (1 <= t <= b), n >= 1 bytes.
  ByteLayout(unsigned b, unsigned t, unsigned n);

  unsigned b() const noexcept { return b_; }
  unsigned t() const noexcept { return t_; }
  unsigned n() const noexcept { return n_; }
  std::size_t length() const noexcept { return std::size_t{n_} * b_; }

  friend bool operator==(const ByteLayout&, const ByteLayout&) = default;

 private:
  unsigned b_;
  unsigned t_;
  unsigned n_;
};

class Word {
 public:
  Word(ByteLayout layout, std::vector<RingElement> coords);
  // The zero word.
  Word(const Ring& ring, ByteLayout layout);

  const ByteLayout& layout() const noexcept { return layout_; }
  unsigned m() const noexcept { return coords_.front().m(); }
  std::size_t size() const noexcept { return coords_.size(); }
  const RingElement& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const RingElement> coords() const noexcept { return coords_; }
  std::span<const RingElement> byte(std::size_t i) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  ByteLayout layout_;
  std::vector<RingElement> coords_;
};

Word operator+(const Word& x, const Word& y);
Word operator*(RingElement r, const Word& x);

class GeneratorMatrix {
 public:
  GeneratorMatrix(Ring ring, ByteLayout layout, std::vector<std::vector<RingElement>> rows);

  const Ring& ring() const noexcept { return ring_; }
  const ByteLayout& layout() const noexcept { return layout_; }
  std::size_t rank_bound() const noexcept { return rows_.size(); }
  const std::vector<std::vector<RingElement>>& rows() const noexcept { return rows_; }

 private:
  Ring ring_;
  ByteLayout layout_;
  std::vector<std::vector<RingElement>> rows_;
};

// A deduplicated codeword set in ascending lexicographic order of
// coefficient vectors (coordinate 0 most significant).
class LinearCode {
 public:
  LinearCode(Ring ring, ByteLayout layout, std::vector<RingElement> flat_symbols);

  const Ring& ring() const noexcept { return ring_; }
  const ByteLayout& layout() const noexcept { return layout_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const RingElement> codeword(std::size_t i) const;
  Word word(std::size_t i) const;
  bool contains(std::span<const RingElement> w) const;

 private:
  Ring ring_;
  ByteLayout layout_;
  std::vector<RingElement> symbols_;
  std::size_t count_;
};

// Lexicographic order on coefficient vectors, as used by LinearCode.
bool word_less(std::span<const RingElement> x, std::span<const RingElement> y);

// sum_i c_i v_i over R.
RingElement inner_product(std::span<const RingElement> c, std::span<const RingElement> v);
inline RingElement inner_product(const Word& c, const Word& v) {
  return inner_product(c.coords(), v.coords());
}

// { sum_i a_i row_i : a in R^k } without duplicates. Needs |R|^k <= budget.
LinearCode span(const GeneratorMatrix& g, std::uint64_t budget = kDefaultSpanBudget,
                unsigned workers = 1);

// { v in R^N : <row, v> = 0 for every row }, by exhaustive scan of R^N.
// Needs |R|^N <= budget.
LinearCode dual(const GeneratorMatrix& g, std::uint64_t budget = kDefaultDualBudget,
                unsigned workers = 1);

// A generating set for C picked greedily from its codewords.
GeneratorMatrix generators_of(const LinearCode& code);

// 2^s with s = sum_i (m - i + 1) k_i for the standard-form row profile
// (k_1, ..., k_m). Throws ParameterError if s >= 64.
std::uint64_t code_size_from_profile(std::span<const unsigned> k_profile);

// Closure of C under addition and R-scalar multiplication. Exhaustive over
// pairs when |C| <= exhaustive_limit, otherwise `samples` random pairs.
bool is_linear(const LinearCode& code, std::uint64_t seed = 1, std::size_t exhaustive_limit = 4096,
               std::size_t samples = 20000);

// |R|^N as a count, or UINT64_MAX when it does not fit.
std::uint64_t ambient_size(const Ring& ring, std::size_t length) noexcept;

}  // namespace spotty
