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

// Arithmetic in the chain ring R = F2[u]/<u^m>.
//
// An element x = r_0 + r_1 u + ... + r_{m-1} u^{m-1} is stored as an m-bit
// coefficient vector; bit i holds r_i. Addition is XOR, multiplication is a
// carry-less product truncated at degree m.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spotty {

inline constexpr unsigned kMaxNilpotency = 16;

class RingElement {
 public:
  // Throws ParameterError if m is out of [1, 16] or bits has positions >= m set.
  RingElement(std::uint32_t bits, unsigned m);

  std::uint32_t bits() const noexcept { return bits_; }
  unsigned m() const noexcept { return m_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  // r_i(x)
  bool coeff(unsigned i) const noexcept { return i < m_ && ((bits_ >> i) & 1u); }

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;

 private:
  std::uint16_t bits_;
  std::uint8_t m_;
};

RingElement add(RingElement a, RingElement b);
RingElement mul(RingElement a, RingElement b);
inline RingElement operator+(RingElement a, RingElement b) { return add(a, b); }
inline RingElement operator*(RingElement a, RingElement b) { return mul(a, b); }

// r_0(x) == 1
bool is_unit(RingElement x) noexcept;

// The additive character (-1)^{r_{m-1}(x)}. For m = 1 this is the classical
// binary character, so chi(1) = -1 there.
int chi(RingElement x) noexcept;

namespace detail {

// Truncated carry-less product on raw coefficient vectors.
constexpr std::uint32_t clmul(std::uint32_t a, std::uint32_t b, std::uint32_t mask) noexcept {
  std::uint32_t r = 0;
  for (unsigned i = 0; b != 0; ++i, b >>= 1) {
    if (b & 1u) r ^= a << i;
  }
  return r & mask;
}

}  // namespace detail

struct Census {
  std::uint32_t units;
  std::uint32_t nonzero_zero_divisors;
  friend bool operator==(const Census&, const Census&) = default;
};

// Split of R into the kernel A of chi and its complement B.
struct Partition {
  std::vector<RingElement> a;
  std::vector<RingElement> b;
};

class Ring {
 public:
  explicit Ring(unsigned m);

  unsigned m() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return 1u << m_; }
  std::uint32_t mask() const noexcept { return size() - 1; }

  RingElement element(std::uint32_t bits) const { return RingElement(bits, m_); }
  RingElement zero() const { return element(0); }
  RingElement one() const { return element(1); }
  // u^k; u^k = 0 for k >= m.
  RingElement u_pow(unsigned k) const { return element(k < m_ ? (1u << k) : 0u); }

  // All 2^m elements in ascending coefficient-vector order.
  std::vector<RingElement> elements() const;

  // <u^k> = u^k R, 0 <= k <= m; |<u^k>| = 2^{m-k}.
  std::vector<RingElement> ideal(unsigned k) const;

  // Requires m >= 2; A = {x : r_{m-1}(x) = 0}.
  Partition partition() const;

  // Closed-form counts (2^{m-1}, 2^{m-1} - 1).
  Census census() const noexcept;

  // Element text: "0", or '+'-separated monomials from {1, u, u2 .. u15};
  // "u^k" is accepted for "uk". Throws ParseError.
  RingElement parse(std::string_view text) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  unsigned m_;
};

// Canonical text, ascending powers: "1+u+u3".
std::string to_string(RingElement x);

}  // namespace spotty
